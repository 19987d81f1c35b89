#include "doctest.h"
#include "oracles.hpp"
#include "stratsys/homology.hpp"
#include "stratsys/roots.hpp"
#include "stratsys/strat_system.hpp"

#include <algorithm>
#include <random>

using namespace stratsys;

namespace {

std::shared_ptr<const Quiver> shared(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

StratSystem sys(std::vector<Module> ms) { return StratSystem{std::move(ms)}; }

bool has_violation(const CheckReport& r, const std::string& axiom, int j, int i, long long value) {
  for (const auto& v : r.violations())
    if (v.axiom == axiom && v.j == j && v.i == i && v.value == value) return true;
  return false;
}

bool has_axiom(const CheckReport& r, const std::string& axiom) {
  for (const auto& v : r.violations())
    if (v.axiom == axiom) return true;
  return false;
}

// Independent check of the axioms straight from the structural Hom dimension.
bool brute_ss(const std::vector<Representation>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (hom_dim(xs[i], xs[i]) != 1 || ext1_dim_direct(xs[i], xs[i]) != 0) return false;
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (hom_dim(xs[j], xs[i]) != 0 || ext1_dim_direct(xs[j], xs[i]) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("check_ss on the Kronecker quiver") {
  ModuleSpace space(shared(kronecker(2)));
  Module p1 = space.preprojective(1, 0), p2 = space.preprojective(2, 0), i2 = space.preinjective(2, 0);
  CHECK(check_ss(space, sys({i2, p1})).passed());
  CHECK(check_css(space, sys({i2, p1})).passed());

  CheckReport bad = check_ss(space, sys({p1, i2}));
  CHECK_FALSE(bad.passed());
  CHECK(has_violation(bad, "ext", 2, 1, 2));

  CheckReport rep = check_css(space, sys({p1, p2, p1}));
  CHECK_FALSE(rep.passed());
  CHECK(has_violation(rep, "hom", 3, 1, 1));
}

TEST_CASE("check_css on the A(2,3) quiver") {
  auto q = shared(canonical_apq(2, 3));
  ModuleSpace space(q);
  auto s = [&](VertexLabel v) { return space.from_rep(simple(q, v), "S" + std::to_string(v)); };
  Module p0 = space.preprojective(0, 0);
  // F = (S1), G = (S3, S2) for p = 2, q = 3.
  StratSystem full = sys({s(4), s(1), s(3), s(2), p0});
  CHECK(check_css(space, full).passed());
  CheckReport fg = check_css(space, sys({s(1), s(3), s(2)}));
  CHECK(has_axiom(fg, "incomplete"));
  CHECK(fg.violations().size() == 1);
}

TEST_CASE("check_ss agrees with a brute-force axiom check on random tuples") {
  for (auto q0 : {kronecker(2), canonical_apq(1, 2), canonical_apq(2, 2)}) {
    auto q = shared(q0);
    ModuleSpace space(q);
    std::vector<Module> pool;
    for (VertexLabel v : q->vertices())
      for (int k = 0; k <= 2; ++k) {
        pool.push_back(space.preprojective(v, k));
        pool.push_back(space.preinjective(v, k));
      }
    std::mt19937 rng(17);
    int passing = 0;
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t t = 1 + rng() % (q->vertex_count() + 1);
      std::vector<Module> ms;
      std::vector<Representation> rs;
      for (std::size_t k = 0; k < t; ++k) {
        ms.push_back(pool[rng() % pool.size()]);
        rs.push_back(ms.back().rep());
      }
      CheckReport r = check_ss(space, sys(ms));
      const bool expected = brute_ss(rs);
      CHECK((r.passed() || has_axiom(r, "size_bound")) == expected);
      if (expected) {
        ++passing;
        CHECK(t <= q->vertex_count());
        // Reversing a pair with nonzero Hom must break the system.
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = i + 1; j < t; ++j)
            if (space.hom_dim(ms[i], ms[j]) != 0) {
              auto swapped = ms;
              std::swap(swapped[i], swapped[j]);
              CHECK_FALSE(check_ss(space, sys(swapped)).passed());
            }
      }
    }
    CHECK(passing > 0);
  }
  CHECK(size_bound_counters().oversized == 0);
}

TEST_CASE("tilting_order") {
  ModuleSpace space(shared(kronecker(2)));
  Module p1 = space.preprojective(1, 0), p2 = space.preprojective(2, 0), tp1 = space.preprojective(1, 1);
  StratSystem a = tilting_order(space, {p2, p1});
  CHECK(a.modules == std::vector<Module>{p1, p2});
  CHECK(check_css(space, a).passed());
  CHECK(basic_tilting_check(space, {p1, p2}).passed());

  StratSystem b = tilting_order(space, {tp1, p2});
  CHECK(b.modules == std::vector<Module>{p2, tp1});
  CHECK(check_css(space, b).passed());

  CHECK_THROWS_WITH(tilting_order(space, {p1, p1}), "not orderable");
  CHECK_FALSE(basic_tilting_check(space, {p1, p1}).passed());
  CHECK_FALSE(basic_tilting_check(space, {p1, space.preinjective(2, 0)}).passed());
}

TEST_CASE("tilting_order on Euclidean quivers") {
  auto q = shared(canonical_apq(2, 3));
  ModuleSpace space(q);
  std::vector<Module> proj;
  for (VertexLabel v : q->vertices()) proj.push_back(space.preprojective(v, 0));
  std::reverse(proj.begin(), proj.end());
  CHECK(basic_tilting_check(space, proj).passed());
  CHECK(check_css(space, tilting_order(space, proj)).passed());
  std::vector<Module> tau;
  for (VertexLabel v : q->vertices()) tau.push_back(space.preprojective(v, 2));
  CHECK(check_css(space, tilting_order(space, tau)).passed());
}

TEST_CASE("filtration multiplicities") {
  auto q = shared(kronecker(2));
  ModuleSpace space(q);
  Module p1 = space.preprojective(1, 0), p2 = space.preprojective(2, 0), i2 = space.preinjective(2, 0);
  auto r = filtration_multiplicity(space, p2, sys({i2, p1}));
  REQUIRE(r.status == FiltrationResult::Status::Filtered);
  CHECK(r.multiplicities == std::vector<long long>{1, 2});

  auto own = filtration_multiplicity(space, i2, sys({i2, p1}));
  CHECK(own.multiplicities == std::vector<long long>{1, 0});

  Representation reg(q, {1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}});
  auto rr = filtration_multiplicity(space, space.from_rep(reg, "R(1,1)"), sys({p1, p2}));
  CHECK(rr.status == FiltrationResult::Status::NotFiltered);

  auto big = filtration_multiplicity(space, space.preprojective(2, 3), sys({i2, p1}));
  CHECK(big.status == FiltrationResult::Status::TooLarge);

  // Every module is filtered by (I2, P1); the dimension identity must hold.
  for (int k = 0; k <= 2; ++k)
    for (Module m : {space.preprojective(1, k), space.preprojective(2, k), space.preinjective(1, k),
                     space.preinjective(2, k)}) {
      auto f = filtration_multiplicity(space, m, sys({i2, p1}));
      REQUIRE(f.status == FiltrationResult::Status::Filtered);
      CHECK(m.dims() == f.multiplicities[0] * i2.dims() + f.multiplicities[1] * p1.dims());
    }
}

TEST_CASE("filtration finiteness") {
  ModuleSpace space(shared(kronecker(2)));
  Module p1 = space.preprojective(1, 0), p2 = space.preprojective(2, 0), i2 = space.preinjective(2, 0);
  CHECK_FALSE(is_filtration_finite(space, sys({i2, p1})));
  CHECK(is_filtration_finite(space, sys({p1, p2})));
  CHECK(is_filtration_finite(space, sys({space.preprojective(1, 1), space.preprojective(2, 1)})));
}

TEST_CASE("extend_to_complete") {
  ModuleSpace space(shared(kronecker(2)));
  Module p1 = space.preprojective(1, 0), p2 = space.preprojective(2, 0), i2 = space.preinjective(2, 0);

  auto done = extend_to_complete(space, sys({i2, p1}));
  REQUIRE(done.first);
  CHECK(done.first->modules == std::vector<Module>{i2, p1});

  ExtendOptions before;
  before.positions = std::vector<std::size_t>{0};
  auto b = extend_to_complete(space, sys({p1}), before);
  REQUIRE(b.first);
  CHECK(b.first->modules[0] == i2);
  CHECK(b.single_slot_solutions == 1u);
  CHECK_FALSE(b.uniqueness_violated);

  ExtendOptions after;
  after.positions = std::vector<std::size_t>{1};
  auto a = extend_to_complete(space, sys({p1}), after);
  REQUIRE(a.first);
  CHECK(a.first->modules[1] == p2);
  CHECK(a.single_slot_solutions == 1u);

  // Continuations (tau^{-i}P1, tau^{-i}P2) and (tau^{-i}P2, tau^{-i-1}P1).
  for (int i = 0; i <= 3; ++i) {
    auto e1 = extend_to_complete(space, sys({space.preprojective(1, i)}), after);
    REQUIRE(e1.first);
    CHECK(e1.first->modules[1] == space.preprojective(2, i));
    auto e2 = extend_to_complete(space, sys({space.preprojective(2, i)}), after);
    REQUIRE(e2.first);
    CHECK(e2.first->modules[1] == space.preprojective(1, i + 1));
  }

  ExtendOptions all;
  all.collect_all = true;
  all.exponent_bound = 3;
  auto every = extend_to_complete(space, sys({}), all);
  for (const auto& c : every.completions) CHECK(check_css(space, c).passed());
  CHECK(every.completions.size() > 8);
}

TEST_CASE("extend_to_complete on A(2,3)") {
  auto q = shared(canonical_apq(2, 3));
  ModuleSpace space(q);
  auto s = [&](VertexLabel v) { return space.from_rep(simple(q, v), "S" + std::to_string(v)); };
  ExtendOptions opt;
  opt.positions = std::vector<std::size_t>{0, 4};
  opt.exponent_bound = 3;
  opt.extra_candidates = {s(1), s(2), s(3), s(4)};
  opt.collect_all = true;
  auto r = extend_to_complete(space, sys({s(1), s(3), s(2)}), opt);
  bool found = false;
  for (const auto& c : r.completions) {
    CHECK(check_css(space, c).passed());
    if (c.modules[0].dims() == s(4).dims() && c.modules[4].dims() == space.preprojective(0, 0).dims()) found = true;
  }
  CHECK(found);
}

TEST_CASE("real roots and generic exceptional modules") {
  Quiver k2 = kronecker(2);
  auto roots = real_roots(k2, 7);
  for (const auto& x : roots) CHECK(std::abs(x[0] - x[1]) == 1);
  CHECK(roots.size() == 8);  // (a, a+1) and (a+1, a) for a = 0..3
  auto q = shared(canonical_apq(2, 3));
  for (const auto& x : real_roots(*q, 4)) {
    auto r = generic_exceptional(q, x);
    REQUIRE(r);
    CHECK(r->dims() == x);
  }
}

TEST_CASE("largest regular stratifying systems") {
  {
    ModuleSpace space(shared(kronecker(2)));
    auto r = max_regular_ss_size(space, 8);
    CHECK(r.pool.empty());
    CHECK(r.max_size == 0);
  }
  {
    ModuleSpace space(shared(canonical_apq(1, 2)));
    auto r = max_regular_ss_size(space, 6);
    CHECK(r.max_size == 1);
    CHECK(check_ss(space, r.witness).passed());
  }
  {
    ModuleSpace space(shared(canonical_apq(2, 3)));
    auto r = max_regular_ss_size(space, 6);
    CHECK(r.max_size == 3);
    CHECK(check_ss(space, r.witness).passed());
    for (const auto& m : r.pool) CHECK(defect(space.quiver(), m.dims()) == 0);
  }
  CHECK_THROWS_AS(max_regular_ss_size(*std::make_unique<ModuleSpace>(shared(kronecker(3))), 4), std::invalid_argument);
}
