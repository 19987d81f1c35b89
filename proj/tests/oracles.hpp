#pragma once
// Independent reference computations used by the tests.

#include "stratsys/matrix.hpp"
#include "stratsys/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using stratsys::DimVector;
using stratsys::Quiver;
using stratsys::QuiverClass;
using stratsys::Rational;
using stratsys::RationalMatrix;

// Symmetrised Tits form matrix: 2 on the diagonal, minus edge multiplicities off it.
inline RationalMatrix tits_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  RationalMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) m(v, v) = 2;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto s = q.source_index(a), t = q.target_index(a);
    m(s, t) -= 1;
    m(t, s) -= 1;
  }
  return m;
}

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

inline Rational principal_minor(const RationalMatrix& m, const std::vector<std::size_t>& idx) {
  RationalMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return determinant(s);
}

// Dynkin iff the Tits form is positive definite, Euclidean iff positive
// semidefinite but singular (connected quivers), wild otherwise.
inline QuiverClass tits_class(const Quiver& q) {
  RationalMatrix m = tits_matrix(q);
  const std::size_t n = q.vertex_count();
  bool definite = true;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (principal_minor(m, idx) <= 0) definite = false;
  }
  if (definite) return QuiverClass::Dynkin;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) idx.push_back(v);
    if (principal_minor(m, idx) < 0) return QuiverClass::Wild;
  }
  return QuiverClass::Euclidean;
}

// Phi = -C^T C^{-1} acting on columns, where C[v][i] = number of paths i -> v
// (dim P_i in column i).
inline std::vector<std::vector<long long>> coxeter_by_cartan(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v)
      c(v, i) = static_cast<long>(stratsys::path_count(q, q.vertices()[i], q.vertices()[v]));
  // Invert c by solving column by column.
  RationalMatrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    stratsys::RationalVector e(n, 0);
    e[k] = 1;
    auto x = stratsys::solve(c, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, k) = (*x)[r];
  }
  RationalMatrix phi = Rational(-1) * (c.transposed() * inv);
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) out[r][k] = phi(r, k).get_num().get_si();
  return out;
}

// True iff `order` (labels, position = number - 1) is admissible: every arrow j -> i has number(j) > number(i).
inline bool is_admissible(const Quiver& q, const std::vector<int>& order) {
  if (order.size() != q.vertex_count()) return false;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> labels = q.vertices();
  std::sort(labels.begin(), labels.end());
  if (sorted != labels) return false;
  auto number = [&](int v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  for (const auto& a : q.arrows())
    if (number(a.source) <= number(a.target)) return false;
  return true;
}

inline Quiver path_quiver(std::vector<std::pair<int, int>> edges, int n, int multiplicity = 1) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<stratsys::Arrow> arrows;
  int count = 0;
  for (auto [s, t] : edges)
    for (int k = 0; k < multiplicity; ++k) arrows.push_back({s, t, "x" + std::to_string(++count)});
  return Quiver(v, arrows);
}

}  // namespace oracle
