#include "stratsys/strat_system.hpp"

#include "stratsys/homology.hpp"
#include "stratsys/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace stratsys {

std::string StratSystem::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < modules.size(); ++k) {
    if (k) out += ", ";
    out += modules[k].name().empty() ? modules[k].dims().to_string() : modules[k].name();
  }
  return out + ")";
}

SizeBoundCounters& size_bound_counters() {
  static SizeBoundCounters counters;
  return counters;
}

namespace {

std::string dim_text(const char* what, std::size_t j, std::size_t i, std::size_t value) {
  return std::string(what) + "(X" + std::to_string(j) + ",X" + std::to_string(i) + ") has dim " + std::to_string(value);
}

}  // namespace

CheckReport check_ss(ModuleSpace& space, const StratSystem& s) {
  CheckReport report("s.s. " + s.to_string());
  const auto& xs = s.modules;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int pos = static_cast<int>(i + 1);
    if (xs[i].is_zero()) {
      report.fail(Violation{"nonzero", std::nullopt, pos, 0, "X" + std::to_string(pos) + " is zero"});
      continue;
    }
    const std::size_t end = space.hom_dim(xs[i], xs[i]);
    const std::size_t self_ext = space.ext1_dim(xs[i], xs[i]);
    if (end != 1)
      report.fail(Violation{"indecomposable", pos, pos, static_cast<long long>(end),
                            "End(X" + std::to_string(pos) + ") has dim " + std::to_string(end)});
    if (self_ext != 0)
      report.fail(Violation{"ext", pos, pos, static_cast<long long>(self_ext), dim_text("Ext^1", pos, pos, self_ext)});
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i].is_zero() || xs[j].is_zero()) continue;
      const int pi = static_cast<int>(i + 1), pj = static_cast<int>(j + 1);
      const std::size_t h = space.hom_dim(xs[j], xs[i]);
      if (h != 0) report.fail(Violation{"hom", pj, pi, static_cast<long long>(h), dim_text("Hom", pj, pi, h)});
      const std::size_t e = space.ext1_dim(xs[j], xs[i]);
      if (e != 0) report.fail(Violation{"ext", pj, pi, static_cast<long long>(e), dim_text("Ext^1", pj, pi, e)});
    }
  if (report.passed()) {
    auto& counters = size_bound_counters();
    ++counters.passing_systems;
    if (xs.size() > space.quiver().vertex_count()) {
      ++counters.oversized;
      report.fail(Violation{"size_bound", std::nullopt, std::nullopt, static_cast<long long>(xs.size()),
                            "size " + std::to_string(xs.size()) + " exceeds the vertex count " +
                                std::to_string(space.quiver().vertex_count())});
    }
  }
  return report;
}

CheckReport check_css(ModuleSpace& space, const StratSystem& s) {
  CheckReport report = check_ss(space, s);
  const std::size_t n = space.quiver().vertex_count();
  if (s.size() < n)
    report.fail(Violation{"incomplete", std::nullopt, std::nullopt, static_cast<long long>(s.size()),
                          std::to_string(s.size()) + " < " + std::to_string(n)});
  return report;
}

StratSystem tilting_order(ModuleSpace& space, const std::vector<Module>& summands) {
  const std::size_t t = summands.size();
  std::vector<VertexLabel> vertices;
  for (std::size_t k = 0; k < t; ++k) vertices.push_back(static_cast<VertexLabel>(k + 1));
  // Arrow j -> i whenever Hom(T_i, T_j) != 0, so sinks may come first.
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (i != j && space.hom_dim(summands[i], summands[j]) != 0)
        arrows.push_back(Arrow{static_cast<VertexLabel>(j + 1), static_cast<VertexLabel>(i + 1),
                               "h" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
  std::vector<VertexLabel> order;
  try {
    order = admissible_numbering(Quiver(vertices, arrows));
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("not orderable");
  }
  StratSystem s;
  for (VertexLabel v : order) s.modules.push_back(summands[static_cast<std::size_t>(v - 1)]);
  return s;
}

CheckReport basic_tilting_check(ModuleSpace& space, const std::vector<Module>& summands) {
  CheckReport report("basic tilting");
  const std::size_t n = space.quiver().vertex_count();
  if (summands.size() != n)
    report.fail("summand_count", std::to_string(summands.size()) + " summands, " + std::to_string(n) + " vertices");
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (!space.is_exceptional(summands[i])) report.fail("exceptional", summands[i].name() + " is not exceptional");
    for (std::size_t j = 0; j < summands.size(); ++j) {
      if (i < j && ModuleSpace::same_exceptional(summands[i], summands[j]))
        report.fail("non_isomorphic", summands[i].name() + " and " + summands[j].name() + " share a dimension vector");
      if (space.ext1_dim(summands[i], summands[j]) != 0)
        report.fail("ext_orthogonal", "Ext^1(" + summands[i].name() + "," + summands[j].name() + ") != 0");
    }
  }
  return report;
}

FiltrationResult filtration_multiplicity(ModuleSpace& space, const Module& m, const StratSystem& s,
                                         long long dim_cap) {
  FiltrationResult result;
  if (m.total_dim() > dim_cap) {
    result.status = FiltrationResult::Status::TooLarge;
    result.detail = "total dimension " + std::to_string(m.total_dim()) + " exceeds the cap " + std::to_string(dim_cap);
    return result;
  }
  (void)space;
  Representation rest = m.rep();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (rest.is_zero()) {
      result.multiplicities.push_back(0);
      continue;
    }
    const Representation& x = s.modules[i].rep();
    HomSpace h = hom_space(rest, x);
    const std::size_t a = h.dim();
    result.multiplicities.push_back(static_cast<long long>(a));
    if (a == 0) continue;
    // Universal map rest -> X^a, stacked per vertex.
    Morphism universal;
    for (std::size_t v = 0; v < rest.quiver().vertex_count(); ++v) {
      const std::size_t dx = static_cast<std::size_t>(x.dim_at(v));
      RationalMatrix stacked(a * dx, static_cast<std::size_t>(rest.dim_at(v)));
      for (std::size_t b = 0; b < a; ++b)
        for (std::size_t r = 0; r < dx; ++r)
          for (std::size_t c = 0; c < stacked.cols(); ++c) stacked(b * dx + r, c) = h.basis[b][v](r, c);
      if (rank(stacked) != a * dx) {
        result.status = FiltrationResult::Status::NotFiltered;
        result.detail = "the universal map onto X" + std::to_string(i + 1) + "^" + std::to_string(a) +
                        " is not surjective";
        result.multiplicities.clear();
        return result;
      }
      universal.push_back(std::move(stacked));
    }
    rest = kernel_of(rest, universal);
  }
  if (!rest.is_zero()) {
    result.status = FiltrationResult::Status::NotFiltered;
    result.detail = "a remainder of dimension " + rest.dims().to_string() + " is left";
    result.multiplicities.clear();
    return result;
  }
  result.status = FiltrationResult::Status::Filtered;
  return result;
}

bool is_filtration_finite(ModuleSpace& space, const StratSystem& s) {
  for (const auto& x : s.modules)
    for (const auto& y : s.modules)
      if (space.ext1_dim(x, y) != 0) return false;
  return true;
}

std::vector<Module> candidate_pool(ModuleSpace& space, const ExtendOptions& options) {
  struct Entry {
    Module m;
    long long total;
    int exponent;
    std::size_t order;
  };
  std::vector<Entry> entries;
  const Quiver& q = space.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    for (int k = 0; k <= options.exponent_bound; ++k)
      for (auto side : {OrbitCoord::Side::Preprojective, OrbitCoord::Side::Preinjective}) {
        Module m = space.orbit_module({side, q.vertices()[v], k});
        if (m.is_zero()) continue;
        entries.push_back({m, m.total_dim(), k, v});
      }
  for (std::size_t e = 0; e < options.extra_candidates.size(); ++e) {
    const Module& m = options.extra_candidates[e];
    if (m.is_zero()) continue;
    entries.push_back({m, m.total_dim(), 0, q.vertex_count() + e});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.total, a.exponent, a.order) < std::tie(b.total, b.exponent, b.order);
  });
  std::vector<Module> pool;
  std::vector<DimVector> seen;
  for (const auto& e : entries) {
    if (std::find(seen.begin(), seen.end(), e.m.dims()) != seen.end()) continue;
    if (!space.is_exceptional(e.m)) continue;
    seen.push_back(e.m.dims());
    pool.push_back(e.m);
  }
  return pool;
}

namespace {

// Hom(later, earlier) = 0 and Ext^1(later, earlier) = 0.
bool ordered_pair_ok(ModuleSpace& space, const Module& earlier, const Module& later) {
  return space.hom_dim(later, earlier) == 0 && space.ext1_dim(later, earlier) == 0;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = start; p < n; ++p) {
    cur.push_back(p);
    combinations(n, k, p + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExtendResult extend_to_complete(ModuleSpace& space, const StratSystem& s, const ExtendOptions& options) {
  ExtendResult result;
  const std::size_t n = space.quiver().vertex_count();
  if (s.size() > n) {
    result.notes.push_back("system already larger than the vertex count");
    return result;
  }
  const std::size_t missing = n - s.size();
  if (missing == 0) {
    if (check_css(space, s).passed()) {
      result.first = s;
      if (options.collect_all) result.completions.push_back(s);
    } else {
      result.notes.push_back("input is not a stratifying system");
    }
    return result;
  }
  if (!check_ss(space, s).passed()) {
    result.notes.push_back("input is not a stratifying system");
    return result;
  }

  std::vector<std::vector<std::size_t>> placements;
  if (options.positions) {
    if (options.positions->size() != missing)
      throw std::invalid_argument("extend_to_complete: expected " + std::to_string(missing) + " positions");
    placements.push_back(*options.positions);
  } else {
    std::vector<std::size_t> cur;
    combinations(n, missing, 0, cur, placements);
  }

  const std::vector<Module> pool = candidate_pool(space, options);
  for (const auto& placement : placements) {
    for (std::size_t k = 0; k < placement.size(); ++k)
      if (placement[k] >= n || (k && placement[k] <= placement[k - 1]))
        throw std::invalid_argument("extend_to_complete: positions must be ascending and below n");
    // Lay out the fixed modules around the open slots.
    std::vector<std::optional<Module>> layout(n);
    {
      std::size_t src = 0, slot = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (slot < placement.size() && placement[slot] == p) {
          ++slot;
          continue;
        }
        layout[p] = s.modules[src++];
      }
    }
    std::size_t solutions_here = 0;
    const bool count_single = missing == 1;
    bool stop = false;
    std::function<void(std::size_t)> fill = [&](std::size_t slot) {
      if (stop) return;
      if (slot == placement.size()) {
        StratSystem full;
        for (const auto& m : layout) full.modules.push_back(*m);
        ++solutions_here;
        if (!result.first) result.first = full;
        if (options.collect_all) result.completions.push_back(full);
        if (!options.collect_all && !count_single) stop = true;
        return;
      }
      const std::size_t pos = placement[slot];
      for (const auto& c : pool) {
        bool ok = true;
        for (std::size_t p = 0; p < n && ok; ++p) {
          if (p == pos || !layout[p]) continue;
          ok = p < pos ? ordered_pair_ok(space, *layout[p], c) : ordered_pair_ok(space, c, *layout[p]);
        }
        if (!ok) continue;
        layout[pos] = c;
        fill(slot + 1);
        layout[pos].reset();
        if (stop) return;
      }
    };
    fill(0);
    if (count_single) {
      if (solutions_here > 0 && !result.single_slot_solutions) result.single_slot_solutions = solutions_here;
      if (solutions_here > 1) {
        result.uniqueness_violated = true;
        std::string where = "slot " + std::to_string(placement[0] + 1);
        result.notes.push_back(std::to_string(solutions_here) + " non-isomorphic completions at " + where);
      }
    }
    if (stop) break;
  }
  if (result.first && !check_css(space, *result.first).passed())
    throw std::logic_error("extend_to_complete produced a system that fails check_css");
  if (!result.first) result.notes.push_back("none found within bounds");
  return result;
}

std::vector<Module> regular_exceptional_pool(ModuleSpace& space, long long dim_cap) {
  const Quiver& q = space.quiver();
  if (space.quiver_class() != QuiverClass::Euclidean)
    throw std::invalid_argument("regular exceptional pool needs a Euclidean quiver");
  std::vector<Module> pool;
  for (const DimVector& x : real_roots(q, dim_cap)) {
    if (defect(q, x) != 0) continue;
    auto r = generic_exceptional(space.quiver_ptr(), x);
    if (r) pool.push_back(space.from_rep(std::move(*r), "R" + x.to_string()));
  }
  return pool;
}

RegularSearchResult max_regular_ss_size(ModuleSpace& space, long long dim_cap) {
  RegularSearchResult result;
  result.pool = regular_exceptional_pool(space, dim_cap);
  const auto& pool = result.pool;
  const std::size_t m = pool.size();
  // ok[a][b]: b may follow a.
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) ok[a][b] = a != b && ordered_pair_ok(space, pool[a], pool[b]);
  std::vector<std::size_t> chosen;
  std::vector<char> used(m, 0);
  std::function<void()> grow = [&]() {
    if (!chosen.empty()) ++result.systems_seen;
    if (chosen.size() > result.max_size) {
      result.max_size = chosen.size();
      result.witness.modules.clear();
      for (std::size_t c : chosen) result.witness.modules.push_back(pool[c]);
    }
    // Any system can be built by appending in order; beyond n+1 nothing new is learned.
    if (chosen.size() > space.quiver().vertex_count()) return;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool fits = true;
      for (std::size_t e : chosen)
        if (!ok[e][c]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      used[c] = 1;
      chosen.push_back(c);
      grow();
      chosen.pop_back();
      used[c] = 0;
    }
  };
  grow();
  return result;
}

}  // namespace stratsys
