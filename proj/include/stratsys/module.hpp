#pragma once

#include "stratsys/ar.hpp"
#include "stratsys/representation.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace stratsys {

/// tau^{-k} P_vertex (Preprojective) or tau^k I_vertex (Preinjective).
struct OrbitCoord {
  enum class Side { Preprojective, Preinjective };
  Side side = Side::Preprojective;
  VertexLabel vertex = 0;
  int k = 0;
  friend auto operator<=>(const OrbitCoord&, const OrbitCoord&) = default;
};

std::string orbit_name(const OrbitCoord& c);

class ModuleSpace;

/// A module known either by an explicit representation or by its orbit
/// coordinate, in which case the representation is built on first use.
class Module {
 public:
  Module() = default;

  std::size_t id() const { return state_->id; }
  const std::string& name() const { return state_->name; }
  const DimVector& dims() const { return state_->dims; }
  const std::optional<OrbitCoord>& orbit() const { return state_->orbit; }
  long long total_dim() const { return state_->dims.total(); }
  bool is_zero() const { return state_->dims.is_zero(); }

  /// The representation; built lazily (thread-safe) for orbit modules.
  const Representation& rep() const;
  bool materialized() const;

  friend bool operator==(const Module& a, const Module& b) { return a.state_ == b.state_; }

 private:
  friend class ModuleSpace;
  struct State {
    std::size_t id = 0;
    std::string name;
    DimVector dims;
    std::optional<OrbitCoord> orbit;
    std::function<Representation()> build;
    mutable std::once_flag once;
    mutable std::optional<Representation> rep;
    mutable std::atomic<bool> ready{false};
    // 0 unknown, 1 yes, 2 no: whether this is a brick in the regular part.
    mutable std::atomic<int> regular_brick{0};
  };
  std::shared_ptr<State> state_;
};

/// Computation context for one quiver: owns orbit modules, caches Hom/Ext
/// dimensions, and picks a route per query.
///
/// Structural route: intertwiner system on the actual representations.
/// Orbit route (representation-infinite quivers, both arguments orbit modules):
///   Hom(tau^{-a}P_i, tau^{-b}P_j) = (Phi^{a-b} dim P_j)_i for a <= b, else 0
///   Hom(tau^a I_i, tau^b I_j)     = (Phi^{a-b} dim I_i)_j for a >= b, else 0
///   Hom(preprojective, preinjective) = <dim X, dim Y>, Hom(preinjective, preprojective) = 0
///   Hom(preprojective, R) = <dim X, dim R>, Hom(R, preinjective) = <dim R, dim Y>
///   Hom(R, preprojective) = Hom(preinjective, R) = 0 for a regular brick R
/// and Ext^1 from the Euler form. Between two orbit modules the structural
/// route is used whenever the linear system has at most `structural_budget`
/// unknowns; with a regular brick it is used only if the orbit module is
/// already materialized.
class ModuleSpace {
 public:
  static constexpr std::size_t kDefaultBudget = 240;

  explicit ModuleSpace(std::shared_ptr<const Quiver> q, std::size_t structural_budget = kDefaultBudget);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  QuiverClass quiver_class() const { return class_; }
  const CoxeterTransform& coxeter() const { return phi_; }
  std::size_t structural_budget() const { return budget_; }
  void set_structural_budget(std::size_t b) { budget_ = b; }

  /// tau^{-k} P_i.
  Module preprojective(VertexLabel i, int k);
  /// tau^k I_i.
  Module preinjective(VertexLabel i, int k);
  Module orbit_module(const OrbitCoord& c);
  Module from_rep(Representation r, std::string name = "");

  enum class Route { Structural, Orbit };
  /// Route a Hom/Ext query between x and y would take.
  Route route(const Module& x, const Module& y) const;
  bool orbit_route_available(const Module& x, const Module& y) const;

  std::size_t hom_dim(const Module& x, const Module& y);
  std::size_t ext1_dim(const Module& x, const Module& y);
  /// Forced routes, for cross-validation.
  std::size_t hom_dim_structural(const Module& x, const Module& y);
  std::optional<std::size_t> hom_dim_orbit(const Module& x, const Module& y) const;
  std::optional<std::size_t> ext1_dim_orbit(const Module& x, const Module& y) const;

  bool is_exceptional(const Module& x);
  /// Non-orbit module with End = K whose dimension vector lies in the regular part.
  bool is_regular_brick(const Module& x);
  /// Exceptional modules over a hereditary algebra are isomorphic iff their
  /// dimension vectors agree.
  static bool same_exceptional(const Module& x, const Module& y) { return x.dims() == y.dims(); }

  ArPosition position(const Module& x, int cap = kDefaultIterationCap) const;

  /// Number of structural and orbit evaluations so far (cache misses only).
  std::pair<std::size_t, std::size_t> route_counts() const;

 private:
  DimVector orbit_dims(const OrbitCoord& c) const;

  std::shared_ptr<const Quiver> quiver_;
  QuiverClass class_;
  CoxeterTransform phi_;
  std::size_t budget_;
  bool representation_infinite_;

  mutable std::mutex mutex_;
  std::size_t next_id_ = 1;
  std::map<OrbitCoord, Module> orbit_modules_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_cache_;
  std::size_t structural_count_ = 0;
  std::size_t orbit_count_ = 0;
};

}  // namespace stratsys
