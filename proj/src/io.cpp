#include "stratsys/io.hpp"

#include <fstream>
#include <sstream>

namespace stratsys {

namespace fs = std::filesystem;

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

const Json& require(const Json& j, const char* key, const Source& src) {
  if (!j.is_object()) src.error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) src.error(std::string("missing key \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const Source& src) {
  if (!j.is_number_integer()) src.error("expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const Source& src, long long lo, long long hi) {
  const long long v = integer(j, src);
  if (v < lo || v > hi) src.error("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::optional<std::pair<int, int>> detect_apq(const Quiver& q) {
  const int n = static_cast<int>(q.vertex_count());
  for (int p = 1; 2 * p <= n; ++p)
    if (canonical_apq(p, n - p) == q) return std::make_pair(p, n - p);
  return std::nullopt;
}

std::unique_ptr<Workspace> make_workspace(Quiver q, const Source& src) {
  const CheckReport report = validate(q);
  if (!report.passed()) src.error("invalid quiver (" + report.first_failure() + "): " + report.violations().front().message);
  return std::make_unique<Workspace>(std::move(q));
}

Source file_source(const fs::path& path) { return Source{path.string(), path.parent_path(), ""}; }

}  // namespace

Source Source::at(const std::string& key) const { return Source{file, base_dir, pointer + "/" + escape_token(key)}; }

Source Source::at(std::size_t index) const { return Source{file, base_dir, pointer + "/" + std::to_string(index)}; }

void Source::error(const std::string& problem) const {
  throw InputError(file + ": " + (pointer.empty() ? "/" : pointer) + ": " + problem);
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const Source& src) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) src.error("expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    src.error(e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({{"src", a.source}, {"tgt", a.target}, {"label", a.label}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Json representation_to_json(const Representation& r) {
  const Quiver& q = r.quiver();
  Json maps = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const RationalMatrix& m = r.map(a);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(i, c)));
      rows.push_back(row);
    }
    maps[q.arrows()[a].label] = rows;
  }
  return {{"quiver", quiver_to_json(q)}, {"dims", r.dims().entries()}, {"maps", maps}};
}

Workspace::Workspace(Quiver q) {
  if (auto pq = detect_apq(q)) {
    apq_ = std::make_unique<Apq>(pq->first, pq->second);
    quiver_ = apq_->quiver();
  } else {
    quiver_ = std::make_shared<const Quiver>(std::move(q));
    space_ = std::make_unique<ModuleSpace>(quiver_);
  }
}

Quiver quiver_from_json(const Json& j, const Source& src) {
  if (j.is_string()) {
    fs::path path = j.get<std::string>();
    if (path.is_relative()) path = src.base_dir / path;
    if (!fs::exists(path)) src.error("quiver file " + path.string() + " not found");
    return load_quiver(path);
  }
  if (!j.is_object()) src.error("expected a quiver object or a file name");
  if (j.contains("kronecker")) return kronecker(small_int(j["kronecker"], src.at("kronecker"), 1, 64));
  if (j.contains("apq")) {
    const Json& pq = j["apq"];
    const Source s = src.at("apq");
    const int p = small_int(require(pq, "p", s), s.at("p"), 1, 64);
    const int q = small_int(require(pq, "q", s), s.at("q"), 1, 64);
    if (q < p) s.error("need p <= q");
    return canonical_apq(p, q);
  }
  const Json& vs = require(j, "vertices", src);
  if (!vs.is_array()) src.at("vertices").error("expected an array");
  std::vector<VertexLabel> vertices;
  for (std::size_t k = 0; k < vs.size(); ++k)
    vertices.push_back(small_int(vs[k], src.at("vertices").at(k), -1000000, 1000000));
  const Json& as = require(j, "arrows", src);
  if (!as.is_array()) src.at("arrows").error("expected an array");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < as.size(); ++k) {
    const Source s = src.at("arrows").at(k);
    const Json& a = as[k];
    const int from = small_int(require(a, "src", s), s.at("src"), -1000000, 1000000);
    const int to = small_int(require(a, "tgt", s), s.at("tgt"), -1000000, 1000000);
    const Json& label = require(a, "label", s);
    if (!label.is_string()) s.at("label").error("expected a string");
    arrows.push_back(Arrow{from, to, label.get<std::string>()});
  }
  try {
    return Quiver(std::move(vertices), std::move(arrows));
  } catch (const std::invalid_argument& e) {
    src.at("vertices").error(e.what());
  }
}

Quiver load_quiver(const fs::path& path) { return quiver_from_json(read_json_file(path), file_source(path)); }

Representation representation_from_json(const Json& j, const std::shared_ptr<const Quiver>& q, const Source& src) {
  const Json& dj = require(j, "dims", src);
  if (!dj.is_array() || dj.size() != q->vertex_count())
    src.at("dims").error("expected " + std::to_string(q->vertex_count()) + " dimensions");
  DimVector dims(q->vertex_count());
  for (std::size_t v = 0; v < dj.size(); ++v) dims[v] = small_int(dj[v], src.at("dims").at(v), 0, 100000);

  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a)
    maps.emplace_back(static_cast<std::size_t>(dims[q->target_index(a)]), static_cast<std::size_t>(dims[q->source_index(a)]));
  if (j.contains("maps")) {
    const Source ms = src.at("maps");
    if (!j["maps"].is_object()) ms.error("expected an object keyed by arrow label");
    for (const auto& [label, rows] : j["maps"].items()) {
      const Source s = ms.at(label);
      auto a = q->arrow_index(label);
      if (!a) s.error("no arrow labelled \"" + label + "\"");
      RationalMatrix& m = maps[*a];
      if (!rows.is_array() || rows.size() != m.rows())
        s.error("expected " + std::to_string(m.rows()) + " rows (" + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + " map)");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || row.size() != m.cols()) s.at(r).error("expected " + std::to_string(m.cols()) + " entries");
        for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = rational_from_json(row[c], s.at(r).at(c));
      }
    }
  }
  return Representation(q, dims, std::move(maps));
}

Module module_from_json(const Json& j, Workspace& ws, const Source& src) {
  ModuleSpace& space = ws.space();
  const Quiver& q = space.quiver();
  if (!j.is_object()) src.error("expected a module descriptor object");
  auto vertex = [&](const Json& v, const Source& s) {
    const int label = small_int(v, s, -1000000, 1000000);
    if (!q.has_vertex(label)) s.error("no vertex " + std::to_string(label));
    return label;
  };
  if (j.contains("dims")) {
    if (j.contains("quiver")) {
      Quiver own = quiver_from_json(j["quiver"], src.at("quiver"));
      if (!(own == q)) src.at("quiver").error("module over a different quiver");
    }
    Representation r = representation_from_json(j, ws.quiver(), src);
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "M" + r.dims().to_string();
    return space.from_rep(std::move(r), name);
  }
  if (j.size() != 1) src.error("expected one symbolic name or an inline representation");
  const auto& [key, value] = *j.items().begin();
  const Source s = src.at(key);
  if (key == "tauP" || key == "tauI") {
    const VertexLabel i = vertex(require(value, "i", s), s.at("i"));
    const int k = value.contains("k") ? small_int(value["k"], s.at("k"), 0, 1000) : 0;
    return key == "tauP" ? space.preprojective(i, k) : space.preinjective(i, k);
  }
  if (key == "P") return space.preprojective(vertex(value, s), 0);
  if (key == "I") return space.preinjective(vertex(value, s), 0);
  if (key == "S") {
    const VertexLabel i = vertex(value, s);
    return space.from_rep(simple(ws.quiver(), i), "S" + std::to_string(i));
  }
  if (key == "E_inf" || key == "E_zero" || key == "E_lambda") {
    Apq* apq = ws.apq();
    if (!apq) s.error("tube modules need a canonical A~(p,q) quiver");
    if (key == "E_lambda") {
      const Rational lambda = rational_from_json(value, s);
      if (is_zero(lambda)) s.error("lambda must be nonzero");
      return apq->mouth(TubeLabel::at(lambda), 1);
    }
    const TubeLabel t = key == "E_inf" ? TubeLabel::infty() : TubeLabel::zero();
    return apq->mouth(t, small_int(value, s, 1, apq->rank(t)));
  }
  s.error("unknown module name \"" + key + "\"");
}

LoadedModule load_module(const fs::path& path) {
  const Json j = read_json_file(path);
  const Source src = file_source(path);
  LoadedModule out;
  out.workspace = make_workspace(quiver_from_json(require(j, "quiver", src), src.at("quiver")), src);
  out.module = j.contains("module") ? module_from_json(j["module"], *out.workspace, src.at("module"))
                                    : module_from_json(j, *out.workspace, src);
  return out;
}

Module load_module_into(const fs::path& path, Workspace& ws) {
  const Json j = read_json_file(path);
  const Source src = file_source(path);
  Quiver own = quiver_from_json(require(j, "quiver", src), src.at("quiver"));
  if (!(own == *ws.quiver())) src.at("quiver").error("module over a different quiver");
  return j.contains("module") ? module_from_json(j["module"], ws, src.at("module")) : module_from_json(j, ws, src);
}

LoadedSystem system_from_json(const Json& j, const Source& src) {
  LoadedSystem out;
  const Json* list = &j;
  Source list_src = src;
  if (j.is_object()) {
    out.workspace = make_workspace(quiver_from_json(require(j, "quiver", src), src.at("quiver")), src);
    list = &require(j, "modules", src);
    list_src = src.at("modules");
  }
  if (!list->is_array()) list_src.error("expected a list of module descriptors");
  if (!out.workspace) {
    if (list->empty()) list_src.error("an empty list does not determine a quiver");
    const Json& first = (*list)[0];
    if (!first.is_object() || !first.contains("quiver"))
      list_src.at(0).error("a bare list needs inline representations with a \"quiver\" key");
    out.workspace = make_workspace(quiver_from_json(first["quiver"], list_src.at(0).at("quiver")), src);
  }
  for (std::size_t k = 0; k < list->size(); ++k)
    out.system.modules.push_back(module_from_json((*list)[k], *out.workspace, list_src.at(k)));
  return out;
}

LoadedSystem load_system(const fs::path& path) { return system_from_json(read_json_file(path), file_source(path)); }

}  // namespace stratsys
