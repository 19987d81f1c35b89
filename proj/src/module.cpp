#include "stratsys/module.hpp"

#include "stratsys/homology.hpp"

#include <stdexcept>

namespace stratsys {

std::string orbit_name(const OrbitCoord& c) {
  const bool pre = c.side == OrbitCoord::Side::Preprojective;
  const std::string base = (pre ? "P" : "I") + std::to_string(c.vertex);
  if (c.k == 0) return base;
  return (pre ? "tau^-" : "tau^") + std::to_string(c.k) + " " + base;
}

const Representation& Module::rep() const {
  std::call_once(state_->once, [this] {
    if (!state_->rep) state_->rep = state_->build();
    state_->ready = true;
  });
  return *state_->rep;
}

bool Module::materialized() const { return state_->ready; }

ModuleSpace::ModuleSpace(std::shared_ptr<const Quiver> q, std::size_t structural_budget)
    : quiver_(std::move(q)), class_(classify_type(*quiver_)), phi_(*quiver_), budget_(structural_budget) {
  representation_infinite_ = class_ != QuiverClass::Dynkin;
}

DimVector ModuleSpace::orbit_dims(const OrbitCoord& c) const {
  if (c.side == OrbitCoord::Side::Preprojective) return phi_.power(projective_dim(*quiver_, c.vertex), -c.k);
  return phi_.power(injective_dim(*quiver_, c.vertex), c.k);
}

Module ModuleSpace::preprojective(VertexLabel i, int k) {
  return orbit_module({OrbitCoord::Side::Preprojective, i, k});
}

Module ModuleSpace::preinjective(VertexLabel i, int k) {
  return orbit_module({OrbitCoord::Side::Preinjective, i, k});
}

Module ModuleSpace::orbit_module(const OrbitCoord& c) {
  if (c.k < 0) throw std::invalid_argument("orbit exponent must be nonnegative");
  if (!quiver_->has_vertex(c.vertex)) throw std::invalid_argument("unknown vertex " + std::to_string(c.vertex));
  {
    std::lock_guard lock(mutex_);
    auto it = orbit_modules_.find(c);
    if (it != orbit_modules_.end()) return it->second;
  }
  std::optional<Module> previous;
  if (c.k > 0) previous = orbit_module({c.side, c.vertex, c.k - 1});

  auto state = std::make_shared<Module::State>();
  state->name = orbit_name(c);
  state->orbit = c;
  auto q = quiver_;
  const bool pre = c.side == OrbitCoord::Side::Preprojective;
  if (!previous) {
    VertexLabel v = c.vertex;
    state->build = [q, v, pre] { return pre ? projective(q, v) : injective(q, v); };
  } else {
    Module prev = *previous;
    state->build = [prev, pre] { return pre ? tau_inv(prev.rep()) : tau(prev.rep()); };
  }
  if (representation_infinite_) {
    state->dims = orbit_dims(c);
  } else {
    // Dynkin orbits reach zero; read the dimension off the module itself.
    state->rep = state->build();
    state->dims = state->rep->dims();
    state->ready = true;
    state->orbit.reset();
  }

  std::lock_guard lock(mutex_);
  auto it = orbit_modules_.find(c);
  if (it != orbit_modules_.end()) return it->second;
  state->id = next_id_++;
  Module m;
  m.state_ = state;
  orbit_modules_.emplace(c, m);
  return m;
}

Module ModuleSpace::from_rep(Representation r, std::string name) {
  if (!(r.quiver() == *quiver_)) throw std::invalid_argument("module over a different quiver");
  auto state = std::make_shared<Module::State>();
  state->name = std::move(name);
  state->dims = r.dims();
  state->rep = std::move(r);
  state->ready = true;
  state->build = [] { return Representation(); };
  std::lock_guard lock(mutex_);
  state->id = next_id_++;
  Module m;
  m.state_ = state;
  return m;
}

namespace {

std::size_t unknowns(const DimVector& x, const DimVector& y) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < x.size(); ++v) n += static_cast<std::size_t>(x[v] * y[v]);
  return n;
}

}  // namespace

bool ModuleSpace::is_regular_brick(const Module& x) {
  if (!representation_infinite_ || x.orbit() || x.is_zero()) return false;
  int known = x.state_->regular_brick.load();
  if (known == 0) {
    bool yes = stratsys::hom_dim(x.rep(), x.rep()) == 1;
    if (yes) {
      const ArPosition pos = ar_position(*quiver_, x.dims());
      // An uncertified answer is trusted only where a preprojective or
      // preinjective module would have reached P or I within the cap.
      yes = pos.kind == ArPosition::Kind::Regular && (pos.certified || x.total_dim() < kDefaultIterationCap);
    }
    known = yes ? 1 : 2;
    x.state_->regular_brick = known;
  }
  return known == 1;
}

bool ModuleSpace::orbit_route_available(const Module& x, const Module& y) const {
  if (!representation_infinite_) return false;
  if (x.orbit() && y.orbit()) return true;
  auto regular = [](const Module& m) { return m.state_->regular_brick.load() == 1; };
  return (x.orbit() && regular(y)) || (regular(x) && y.orbit());
}

ModuleSpace::Route ModuleSpace::route(const Module& x, const Module& y) const {
  if (!orbit_route_available(x, y)) return Route::Structural;
  if (!x.orbit() || !y.orbit()) {
    const Module& o = x.orbit() ? x : y;
    return o.materialized() && unknowns(x.dims(), y.dims()) <= budget_ ? Route::Structural : Route::Orbit;
  }
  auto affordable = [&](const Module& m) { return m.materialized() || unknowns(m.dims(), m.dims()) <= budget_; };
  if (unknowns(x.dims(), y.dims()) <= budget_ && affordable(x) && affordable(y)) return Route::Structural;
  return Route::Orbit;
}

std::size_t ModuleSpace::hom_dim_structural(const Module& x, const Module& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  return stratsys::hom_dim(x.rep(), y.rep());
}

namespace {

long long entry(const DimVector& d, const Quiver& q, VertexLabel v) { return d[q.index_of(v)]; }

}  // namespace

std::optional<std::size_t> ModuleSpace::hom_dim_orbit(const Module& x, const Module& y) const {
  if (!orbit_route_available(x, y)) return std::nullopt;
  using Side = OrbitCoord::Side;
  if (!x.orbit() || !y.orbit()) {
    const bool x_orbit = x.orbit().has_value();
    const Side side = (x_orbit ? x : y).orbit()->side;
    // Maps into the regular part come only from preprojectives, maps out of it only go to preinjectives.
    const bool nonzero = x_orbit ? side == Side::Preprojective : side == Side::Preinjective;
    const long long value = nonzero ? euler_form(*quiver_, x.dims(), y.dims()) : 0;
    if (value < 0) throw std::logic_error("orbit route produced a negative dimension");
    return static_cast<std::size_t>(value);
  }
  const OrbitCoord& a = *x.orbit();
  const OrbitCoord& b = *y.orbit();
  long long value = 0;
  if (a.side == Side::Preprojective && b.side == Side::Preprojective) {
    if (a.k <= b.k) value = entry(phi_.power(projective_dim(*quiver_, b.vertex), a.k - b.k), *quiver_, a.vertex);
  } else if (a.side == Side::Preinjective && b.side == Side::Preinjective) {
    if (a.k >= b.k) value = entry(phi_.power(injective_dim(*quiver_, a.vertex), a.k - b.k), *quiver_, b.vertex);
  } else if (a.side == Side::Preprojective) {
    value = euler_form(*quiver_, x.dims(), y.dims());
  }
  if (value < 0) throw std::logic_error("orbit route produced a negative dimension");
  return static_cast<std::size_t>(value);
}

std::optional<std::size_t> ModuleSpace::ext1_dim_orbit(const Module& x, const Module& y) const {
  if (!orbit_route_available(x, y) || !x.orbit() || !y.orbit()) return std::nullopt;
  // Ext^1(X, Y) = D Hom(Y, tau X), with tau moving one step along the orbit.
  OrbitCoord t = *x.orbit();
  if (t.side == OrbitCoord::Side::Preprojective) {
    if (t.k == 0) return 0;
    --t.k;
  } else {
    ++t.k;
  }
  Module translate;
  auto state = std::make_shared<Module::State>();
  state->orbit = t;
  state->dims = orbit_dims(t);
  translate.state_ = state;
  return hom_dim_orbit(y, translate);
}

std::size_t ModuleSpace::hom_dim(const Module& x, const Module& y) {
  const auto key = std::make_pair(x.id(), y.id());
  {
    std::lock_guard lock(mutex_);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
  }
  if (x.orbit().has_value() != y.orbit().has_value()) is_regular_brick(x.orbit() ? y : x);
  std::size_t value;
  const bool structural = route(x, y) == Route::Structural;
  value = structural ? hom_dim_structural(x, y) : *hom_dim_orbit(x, y);
  std::lock_guard lock(mutex_);
  (structural ? structural_count_ : orbit_count_)++;
  hom_cache_[key] = value;
  return value;
}

std::size_t ModuleSpace::ext1_dim(const Module& x, const Module& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  const long long e = static_cast<long long>(hom_dim(x, y)) - euler_form(*quiver_, x.dims(), y.dims());
  if (e < 0) throw std::logic_error("negative Ext dimension");
  return static_cast<std::size_t>(e);
}

bool ModuleSpace::is_exceptional(const Module& x) {
  return !x.is_zero() && hom_dim(x, x) == 1 && ext1_dim(x, x) == 0;
}

ArPosition ModuleSpace::position(const Module& x, int cap) const {
  if (representation_infinite_ && x.orbit()) {
    const auto& c = *x.orbit();
    return ArPosition{c.side == OrbitCoord::Side::Preprojective ? ArPosition::Kind::Preprojective
                                                                 : ArPosition::Kind::Preinjective,
                      c.vertex, c.k, true};
  }
  return ar_position(*quiver_, x.dims(), cap);
}

std::pair<std::size_t, std::size_t> ModuleSpace::route_counts() const {
  std::lock_guard lock(mutex_);
  return {structural_count_, orbit_count_};
}

}  // namespace stratsys
