#pragma once

#include "stratsys/apq.hpp"
#include "stratsys/strat_system.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

namespace stratsys {

using Json = nlohmann::ordered_json;

/// Malformed input. what() starts with the location: "file: /json/pointer: problem".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where a JSON value came from, for error messages and relative paths.
struct Source {
  std::string file;                 // display name
  std::filesystem::path base_dir;   // relative quiver paths resolve here
  std::string pointer;              // JSON pointer of the value

  Source at(const std::string& key) const;
  Source at(std::size_t index) const;
  [[noreturn]] void error(const std::string& problem) const;
};

Json read_json_file(const std::filesystem::path& path);

Json rational_to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const Source& src);

Json quiver_to_json(const Quiver& q);
Json representation_to_json(const Representation& r);

/// Quiver plus the context a file asked for: "apq" descriptors (and inline
/// quivers equal to a canonical A~(p,q)) get the tube machinery.
class Workspace {
 public:
  explicit Workspace(Quiver q);

  const std::shared_ptr<const Quiver>& quiver() const { return quiver_; }
  ModuleSpace& space() { return apq_ ? apq_->space() : *space_; }
  Apq* apq() { return apq_.get(); }

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::unique_ptr<Apq> apq_;
  std::unique_ptr<ModuleSpace> space_;
};

/// {"kronecker": m}, {"apq": {"p": p, "q": q}}, {"vertices": [...], "arrows": [...]}
/// or a string naming a file holding one of these.
Quiver quiver_from_json(const Json& j, const Source& src);
Quiver load_quiver(const std::filesystem::path& path);

/// {"dims": [...], "maps": {"label": [[...], ...]}} over a known quiver.
/// Arrows without an entry get the zero map.
Representation representation_from_json(const Json& j, const std::shared_ptr<const Quiver>& q, const Source& src);

/// Inline representation or one of the symbolic names
/// {"tauP": {"i", "k"}}, {"tauI": {"i", "k"}}, {"S": i}, {"P": i}, {"I": i},
/// {"E_inf": i}, {"E_zero": j}, {"E_lambda": "p/q"}; the E names need an A~(p,q) quiver.
Module module_from_json(const Json& j, Workspace& ws, const Source& src);

struct LoadedModule {
  std::unique_ptr<Workspace> workspace;
  Module module;
};

/// Module file: a representation with a "quiver" key, or {"quiver": Q, "module": descriptor}.
LoadedModule load_module(const std::filesystem::path& path);
/// Reads another module over the same quiver; a different quiver is an input error.
Module load_module_into(const std::filesystem::path& path, Workspace& ws);

struct LoadedSystem {
  std::unique_ptr<Workspace> workspace;
  StratSystem system;
};

/// {"quiver": Q, "modules": [descriptors]} or a bare list of inline
/// representations that each carry their quiver.
LoadedSystem load_system(const std::filesystem::path& path);
LoadedSystem system_from_json(const Json& j, const Source& src);

}  // namespace stratsys
