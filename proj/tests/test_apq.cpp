#include "doctest.h"
#include "stratsys/apq.hpp"
#include "stratsys/homology.hpp"

#include <numeric>

using namespace stratsys;

namespace {

std::set<VertexLabel> range_set(int lo, int hi) {
  std::set<VertexLabel> s;
  for (int v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("simple regular representations") {
  Apq a(2, 3);
  CHECK(a.simple_regular(TubeLabel::infty(), 2).dims() == DimVector{1, 0, 1, 1, 1});
  CHECK(a.simple_regular(TubeLabel::zero(), 3).dims() == DimVector{1, 1, 0, 0, 1});
  CHECK(a.simple_regular(TubeLabel::at(Rational(1, 2)), 1).dims() == DimVector{1, 1, 1, 1, 1});
  CHECK(a.simple_regular(TubeLabel::infty(), 1).dims() == DimVector{0, 1, 0, 0, 0});
  CHECK(a.simple_regular(TubeLabel::zero(), 1).dims() == DimVector{0, 0, 1, 0, 0});
  CHECK_THROWS(a.simple_regular(TubeLabel::infty(), 3));
  CHECK_THROWS(a.simple_regular(TubeLabel::at(1), 2));
  CHECK_THROWS(TubeLabel::at(0));

  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 4}}) {
    Apq apq(p, q);
    for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero(), TubeLabel::at(2), TubeLabel::at(-1)}) {
      const int r = apq.rank(t);
      for (int i = 1; i <= r; ++i) {
        Representation e = apq.simple_regular(t, i);
        CHECK(is_brick(e));
        CHECK(defect(*apq.quiver(), e.dims()) == 0);
        CHECK(ar_position(e).kind == ArPosition::Kind::Regular);
        for (int k = i + 1; k <= r; ++k) {
          CHECK(hom_dim(e, apq.simple_regular(t, k)) == 0);
          CHECK(hom_dim(apq.simple_regular(t, k), e) == 0);
        }
      }
    }
  }
}

TEST_CASE("tau cycles around the tubes") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    Apq apq(p, q);
    CheckReport r = verify_tau_cycles(apq);
    INFO(p << "," << q);
    CHECK(r.passed());
    if (q >= 2) {
      REQUIRE(r.notes().size() == 2);
      CHECK(r.notes()[0].find("holds") != std::string::npos);
      CHECK(r.notes()[1].find("holds") != std::string::npos);
    }
  }
  Apq a(2, 3);
  Representation e1 = a.simple_regular(TubeLabel::at(1), 1);
  CHECK(tau(e1).dims() == DimVector{1, 1, 1, 1, 1});
  CHECK(hom_dim(e1, tau(e1)) != 0);
}

TEST_CASE("F and G systems") {
  Apq a(2, 3);
  StratSystem fg = a.fg_system();
  REQUIRE(fg.size() == 3);
  CHECK(fg.modules[0].dims() == DimVector{0, 1, 0, 0, 0});
  CHECK(fg.modules[1].dims() == DimVector{0, 0, 0, 1, 0});
  CHECK(fg.modules[2].dims() == DimVector{0, 0, 1, 0, 0});
  CHECK(check_ss(a.space(), fg).passed());

  Apq b(1, 2);
  StratSystem g = b.fg_system();
  REQUIRE(g.size() == 1);
  CHECK(g.modules[0].dims() == DimVector{0, 1, 0});

  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {3, 4}, {1, 4}}) {
    Apq c(p, q);
    StratSystem s = c.fg_system();
    CHECK(s.size() == static_cast<std::size_t>(p + q - 2));
    CHECK(check_ss(c.space(), s).passed());
  }
}

TEST_CASE("support closed forms") {
  CHECK(support_formula(2, 3, FgSide::F, 2) == std::set<VertexLabel>{1});
  CHECK(support_formula(2, 3, FgSide::F, 1) == std::set<VertexLabel>{0, 2, 3, 4});
  CHECK(support_formula(2, 3, FgSide::G, -1) == std::set<VertexLabel>{0, 1, 3, 4});
  CHECK(support_formula(2, 3, FgSide::G, 3) == range_set(2, 3));
  CHECK(support_formula(1, 2, FgSide::F, 5).empty());

  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    Apq apq(p, q);
    const int n_max = 2 * std::lcm(p, q);
    CheckReport r = verify_support_formula(apq, n_max);
    INFO(p << "," << q << ": " << (r.passed() ? "" : r.violations().front().message));
    CHECK(r.passed());
  }
}

TEST_CASE("mouth systems") {
  Apq a(2, 3);
  StratSystem z = a.mouth_ss(TubeLabel::zero());
  REQUIRE(z.size() == 2);
  CHECK(z.modules[0].dims() == DimVector{0, 0, 0, 1, 0});
  CHECK(z.modules[1].dims() == DimVector{0, 0, 1, 0, 0});
  CHECK(check_ss(a.space(), z).passed());
  StratSystem inf = a.mouth_ss(TubeLabel::infty());
  REQUIRE(inf.size() == 1);
  CHECK(inf.modules[0].dims() == DimVector{0, 1, 0, 0, 0});
  CHECK(check_ss(a.space(), inf).passed());
  CHECK(a.mouth_ss(TubeLabel::at(1)).size() == 0);

  Apq b(3, 4);
  for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()}) {
    StratSystem s = b.mouth_ss(t);
    CHECK(s.size() == static_cast<std::size_t>(b.rank(t) - 1));
    CHECK(check_ss(b.space(), s).passed());
  }
}

TEST_CASE("tube points along rays") {
  Apq a(2, 3);
  const TubeLabel z = TubeLabel::zero();
  const Representation& n = a.tube_point({z, 1, 2});
  CHECK(n.dims() == DimVector{0, 0, 1, 1, 0});
  CHECK(is_exceptional(n));
  CHECK(n.dims().total() == 2);
  // E_1 is the simple regular submodule of E_1[2].
  CHECK(hom_dim(a.simple_regular(z, 1), n) == 1);
  const Representation& whole = a.tube_point({z, 1, 3});
  CHECK(whole.dims() == null_root(*a.quiver()));
  CHECK(is_brick(whole));
  CHECK(ext1_dim(whole, whole) == 1);
  CHECK(a.cone({z, 3, 2}) == std::set<int>{3, 1});
  // Rank 2: E1 and E2 extend each other.
  const TubeLabel inf = TubeLabel::infty();
  CHECK(ext1_dim(a.tube_point({inf, 1, 1}), a.tube_point({inf, 2, 1})) != 0);
  for (int j = 1; j <= 4; ++j) {
    const Representation& h = a.tube_point({TubeLabel::at(2), 1, j});
    CHECK(h.dims() == j * null_root(*a.quiver()));
    CHECK(ext1_dim(h, h) >= 1);
  }
}

TEST_CASE("rigid modules in a tube obey the length bound") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 4}}) {
    Apq apq(p, q);
    for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero(), TubeLabel::at(1)}) {
      auto r = tube_rigid_bound_check(apq, t);
      const int rank = apq.rank(t);
      INFO(p << "," << q << " " << t.to_string());
      CHECK(r.report.passed());
      CHECK(r.rigid_points == static_cast<std::size_t>(rank * (rank - 1)));
      CHECK(r.largest_set == static_cast<std::size_t>(rank - 1));
      if (rank == 1) CHECK(r.orthogonal_sets == 0);
      if (rank >= 2) CHECK(r.disjoint_cone_sets > 0);
    }
  }
}
