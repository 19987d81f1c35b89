#include "doctest.h"
#include "stratsys/homology.hpp"
#include "stratsys/representation.hpp"

#include <random>

using namespace stratsys;

namespace {

std::shared_ptr<const Quiver> shared(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

Representation regular11(std::shared_ptr<const Quiver> k2, const Rational& lambda) {
  return Representation(k2, {1, 1}, {RationalMatrix{{1}}, RationalMatrix{{lambda}}});
}

// Random representation with dims in [0, max_dim].
Representation random_rep(std::shared_ptr<const Quiver> q, std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> d(0, max_dim);
  DimVector dims(q->vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = d(rng);
  return random_representation(q, dims, rng(), 2);
}

std::vector<std::shared_ptr<const Quiver>> test_quivers() {
  return {shared(kronecker(2)), shared(kronecker(3)), shared(canonical_apq(2, 3))};
}

}  // namespace

TEST_CASE("named modules") {
  auto k2 = shared(kronecker(2));
  CHECK(projective(k2, 1).dims() == DimVector{1, 0});
  CHECK(projective(k2, 2).dims() == DimVector{2, 1});
  CHECK(injective(k2, 2).dims() == DimVector{0, 1});
  CHECK(injective(k2, 1).dims() == DimVector{1, 2});
  CHECK(injective(k2, 2) == simple(k2, 2));
  auto apq = shared(canonical_apq(2, 3));
  CHECK(projective(apq, 0).dims() == DimVector{1, 0, 0, 0, 0});
  CHECK(supp(simple(apq, 3)) == std::set<VertexLabel>{3});
  CHECK_THROWS(simple(k2, 7));
  for (auto q : test_quivers())
    for (VertexLabel v : q->vertices()) {
      CHECK(projective(q, v).dims() == projective_dim(*q, v));
      CHECK(injective(q, v).dims() == injective_dim(*q, v));
    }
}

TEST_CASE("representation shapes are validated") {
  auto k2 = shared(kronecker(2));
  CHECK_THROWS(Representation(k2, {1, 1}, {RationalMatrix{{1}}}));
  CHECK_THROWS(Representation(k2, {1, 1}, {RationalMatrix{{1, 0}}, RationalMatrix{{1}}}));
}

TEST_CASE("hom dimensions") {
  for (int m = 1; m <= 4; ++m) {
    auto k = shared(kronecker(m));
    CHECK(hom_dim(projective(k, 1), projective(k, 2)) == static_cast<std::size_t>(m));
    CHECK(hom_dim(projective(k, 2), projective(k, 1)) == 0);
  }
  auto k2 = shared(kronecker(2));
  CHECK(ext1_dim(injective(k2, 2), projective(k2, 1)) == 2);
  CHECK(ext1_dim_direct(injective(k2, 2), projective(k2, 1)) == 2);
  CHECK(ext1_dim_direct(projective(k2, 2), projective(k2, 1)) == 0);
  Representation r = regular11(k2, 1);
  CHECK(ext1_dim_direct(r, r) == 1);
  CHECK(is_brick(r));
  CHECK_FALSE(is_exceptional(r));
}

TEST_CASE("projectives are exceptional, Ext out of projectives vanishes") {
  std::mt19937_64 rng(5);
  for (auto q : test_quivers())
    for (VertexLabel v : q->vertices()) {
      Representation p = projective(q, v);
      CHECK(is_exceptional(p));
      CHECK(is_exceptional(injective(q, v)));
      Representation y = random_rep(q, rng, 3);
      CHECK(ext1_dim(p, y) == 0);
      CHECK(hom_dim(p, y) == static_cast<std::size_t>(y.dim_at(q->index_of(v))));
    }
}

TEST_CASE("hom basis elements are morphisms") {
  std::mt19937_64 rng(9);
  for (auto q : test_quivers())
    for (int trial = 0; trial < 20; ++trial) {
      Representation x = random_rep(q, rng, 2), y = random_rep(q, rng, 3);
      HomSpace h = hom_space(x, y);
      for (const auto& f : h.basis) CHECK(is_morphism(x, y, f));
      CHECK(h.dim() == hom_dim(x, y));
    }
}

TEST_CASE("euler form equals hom minus direct ext on random pairs") {
  std::mt19937_64 rng(2024);
  for (auto q : test_quivers()) {
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Representation x = random_rep(q, rng, 3), y = random_rep(q, rng, 3);
      const long long h = static_cast<long long>(hom_dim(x, y));
      const long long e = static_cast<long long>(ext1_dim_direct(x, y));
      CHECK(euler_form(*q, x.dims(), y.dims()) == h - e);
      CHECK(ext1_dim(x, y) == static_cast<std::size_t>(e));
      CHECK(hom_dim_via_presentation(minimal_presentation(x), y) == static_cast<std::size_t>(h));
      ++checked;
    }
    CHECK(checked == 100);
  }
}

TEST_CASE("exceptional module in a rank-3 tube") {
  auto apq = shared(canonical_apq(2, 3));
  // Upper branch identity, lower branch zero.
  std::vector<RationalMatrix> maps;
  for (const auto& a : apq->arrows()) {
    const auto s = apq->index_of(a.source), t = apq->index_of(a.target);
    const DimVector d{1, 1, 0, 0, 1};
    RationalMatrix m(d[t], d[s]);
    if (a.label[0] == 'u') m(0, 0) = 1;
    maps.push_back(m);
  }
  Representation e(apq, {1, 1, 0, 0, 1}, maps);
  CHECK(is_exceptional(e));
}

TEST_CASE("extensions and kernels") {
  auto k2 = shared(kronecker(2));
  Representation s1 = simple(k2, 1), s2 = simple(k2, 2);
  auto cocycles = ext1_cocycles(s2, s1);
  REQUIRE(cocycles.size() == 2);
  Representation z = extension_middle(s1, s2, cocycles[0]);
  CHECK(z.dims() == DimVector{1, 1});
  CHECK(is_brick(z));
  CHECK(ext1_dim(z, z) == 1);
  // Kernel of the projection P2 -> S2 is the radical P1^2.
  HomSpace h = hom_space(projective(k2, 2), s2);
  REQUIRE(h.dim() == 1);
  Representation k = kernel_of(projective(k2, 2), h.basis[0]);
  CHECK(k.dims() == DimVector{2, 0});
}

TEST_CASE("isomorphism search") {
  auto k2 = shared(kronecker(2));
  Representation a = regular11(k2, 2);
  Representation b(k2, {1, 1}, {RationalMatrix{{3}}, RationalMatrix{{6}}});
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(a, regular11(k2, 3)));
  CHECK_FALSE(is_isomorphic(a, projective(k2, 2)));
}

TEST_CASE("direct sums and support") {
  auto apq = shared(canonical_apq(2, 3));
  Representation m = direct_sum({simple(apq, 0), simple(apq, 4)});
  CHECK(m.dims() == DimVector{1, 0, 0, 0, 1});
  CHECK(supp(m) == std::set<VertexLabel>{0, 4});
  CHECK_FALSE(is_sincere(m));
  CHECK(is_sincere(projective(apq, 4)));
  CHECK(hom_dim(m, m) == 2);
  CHECK_FALSE(is_brick(m));
}
