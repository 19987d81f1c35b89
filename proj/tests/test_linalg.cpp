#include "doctest.h"
#include "stratsys/matrix.hpp"

#include <random>

using namespace stratsys;

TEST_CASE("rank of small matrices") {
  CHECK(rank(RationalMatrix::identity(2)) == 2);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RationalMatrix(0, 5)) == 0);
  CHECK(rank(RationalMatrix(3, 0)) == 0);
}

TEST_CASE("kernel bases") {
  auto k = kernel_basis(RationalMatrix{{1, 2}, {2, 4}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalVector{-2, 1});
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
  CHECK(kernel_basis(RationalMatrix(2, 3)).size() == 3);
}

TEST_CASE("solve") {
  auto a = solve(RationalMatrix::identity(2), {3, 5});
  REQUIRE(a);
  CHECK(*a == RationalVector{3, 5});
  auto b = solve(RationalMatrix{{1, 1}}, {2});
  REQUIRE(b);
  CHECK(*b == RationalVector{2, 0});
  CHECK_FALSE(solve(RationalMatrix{{1}, {1}}, {0, 1}));
}

TEST_CASE("rationals print canonically") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("kernel and solve properties on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), size(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 ? entry(rng) : 1);
    auto kernel = kernel_basis(m);
    CHECK(kernel.size() == c - rank(m));
    for (const auto& v : kernel) CHECK(m * v == RationalVector(r, 0));
    RationalVector x(c);
    for (auto& e : x) e = entry(rng);
    RationalVector b = m * x;
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(m * *s == b);
    // Rank is invariant under transposition.
    CHECK(rank(m) == rank(m.transposed()));
  }
}
