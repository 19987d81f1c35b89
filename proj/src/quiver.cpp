#include "stratsys/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stratsys {

// ---- DimVector -------------------------------------------------------------

long long DimVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool DimVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long long x) { return x >= 0; });
}

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long long x) { return x == 0; });
}

bool DimVector::is_positive() const { return is_nonnegative() && !is_zero(); }

DimVector& DimVector::operator+=(const DimVector& o) {
  if (o.size() != size()) throw std::invalid_argument("dimension vector length mismatch");
  for (std::size_t k = 0; k < size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  if (o.size() != size()) throw std::invalid_argument("dimension vector length mismatch");
  for (std::size_t k = 0; k < size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

DimVector operator*(long long s, DimVector a) {
  for (auto& x : a.entries_) x *= s;
  return a;
}

DimVector operator-(DimVector a) {
  for (auto& x : a.entries_) x = -x;
  return a;
}

std::string DimVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) out << (k ? "," : "") << entries_[k];
  out << ')';
  return out.str();
}

std::string to_string(QuiverClass c) {
  switch (c) {
    case QuiverClass::Dynkin: return "Dynkin";
    case QuiverClass::Euclidean: return "Euclidean";
    case QuiverClass::Wild: return "Wild";
  }
  return "?";
}

// ---- Quiver ----------------------------------------------------------------

Quiver::Quiver(std::vector<VertexLabel> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!index_.emplace(vertices_[k], k).second)
      throw std::invalid_argument("duplicate vertex label " + std::to_string(vertices_[k]));
  }
}

std::size_t Quiver::index_of(VertexLabel v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return it->second;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].label == label) return k;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  reversed.reserve(arrows_.size());
  for (const auto& a : arrows_) reversed.push_back(Arrow{a.target, a.source, a.label});
  return Quiver(vertices_, std::move(reversed));
}

namespace {

bool endpoints_known(const Quiver& q) {
  return std::all_of(q.arrows().begin(), q.arrows().end(), [&](const Arrow& a) {
    return q.has_vertex(a.source) && q.has_vertex(a.target);
  });
}

bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<int> indegree(n, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) ++indegree[q.target_index(a)];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.source_index(a) == v && --indegree[q.target_index(a)] == 0)
        ready.push_back(q.target_index(a));
  }
  return seen == n;
}

bool is_connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    parent[find(q.source_index(a))] = find(q.target_index(a));
  std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

}  // namespace

CheckReport validate(const Quiver& q) {
  CheckReport report("quiver");
  if (!endpoints_known(q)) {
    report.fail("endpoints", "an arrow endpoint is not in the vertex list");
    return report;
  }
  std::set<std::string> labels;
  for (const auto& a : q.arrows())
    if (!labels.insert(a.label).second) report.fail("labels", "duplicate arrow label '" + a.label + "'");
  if (!is_acyclic(q)) report.fail("acyclic", "the quiver has a directed cycle");
  if (!is_connected(q)) report.fail("connected", "the underlying graph is not connected");
  return report;
}

std::vector<VertexLabel> admissible_numbering(const Quiver& q) {
  if (!endpoints_known(q)) throw std::invalid_argument("admissible_numbering: dangling arrow");
  const std::size_t n = q.vertex_count();
  std::vector<bool> numbered(n, false);
  std::vector<VertexLabel> order;
  order.reserve(n);
  while (order.size() < n) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      bool sink = true;
      for (std::size_t a = 0; a < q.arrow_count() && sink; ++a)
        if (q.source_index(a) == v && !numbered[q.target_index(a)]) sink = false;
      if (sink && (!best || q.vertices()[v] < q.vertices()[*best])) best = v;
    }
    if (!best) throw std::invalid_argument("admissible_numbering: quiver has a cycle");
    numbered[*best] = true;
    order.push_back(q.vertices()[*best]);
  }
  return order;
}

long long euler_form(const Quiver& q, const DimVector& x, const DimVector& y) {
  if (x.size() != q.vertex_count() || y.size() != q.vertex_count())
    throw std::invalid_argument("euler_form: vector length does not match the quiver");
  long long value = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) value += x[v] * y[v];
  for (std::size_t a = 0; a < q.arrow_count(); ++a) value -= x[q.source_index(a)] * y[q.target_index(a)];
  return value;
}

long long path_count(const Quiver& q, VertexLabel from, VertexLabel to) {
  // Acyclic, so a memoised DFS terminates.
  std::vector<std::optional<long long>> memo(q.vertex_count());
  const std::size_t goal = q.index_of(to);
  std::function<long long(std::size_t)> count = [&](std::size_t v) -> long long {
    if (memo[v]) return *memo[v];
    long long c = (v == goal) ? 1 : 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.source_index(a) == v) c += count(q.target_index(a));
    memo[v] = c;
    return c;
  };
  return count(q.index_of(from));
}

DimVector projective_dim(const Quiver& q, VertexLabel i) {
  DimVector d(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) d[v] = path_count(q, i, q.vertices()[v]);
  return d;
}

DimVector injective_dim(const Quiver& q, VertexLabel i) {
  DimVector d(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) d[v] = path_count(q, q.vertices()[v], i);
  return d;
}

// ---- Coxeter transform -----------------------------------------------------

namespace {

std::vector<std::vector<long long>> to_integer(const RationalMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw std::logic_error("Coxeter transform is not an integer matrix");
      out[r][c] = x.get_num().get_si();
    }
  return out;
}

// Solves X * a = b for X (a invertible).
RationalMatrix right_divide(const RationalMatrix& b, const RationalMatrix& a) {
  RationalMatrix at = a.transposed();
  RationalMatrix bt = b.transposed();
  RationalMatrix xt(at.cols(), bt.cols());
  for (std::size_t c = 0; c < bt.cols(); ++c) {
    auto sol = solve(at, bt.column(c));
    if (!sol) throw std::logic_error("singular matrix in Coxeter construction");
    for (std::size_t r = 0; r < xt.rows(); ++r) xt(r, c) = (*sol)[r];
  }
  return xt.transposed();
}

DimVector apply_matrix(const std::vector<std::vector<long long>>& m, const DimVector& x) {
  if (x.size() != m.size()) throw std::invalid_argument("Coxeter: vector length mismatch");
  DimVector y(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      long long term = 0;
      if (__builtin_mul_overflow(m[r][c], x[c], &term) || __builtin_add_overflow(y[r], term, &y[r]))
        throw std::overflow_error("Coxeter: dimension vector overflow");
    }
  return y;
}

}  // namespace

CoxeterTransform::CoxeterTransform(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  RationalMatrix proj(n, n), inj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    DimVector p = projective_dim(q, q.vertices()[i]);
    DimVector e = injective_dim(q, q.vertices()[i]);
    for (std::size_t v = 0; v < n; ++v) {
      proj(v, i) = static_cast<long>(p[v]);
      inj(v, i) = static_cast<long>(e[v]);
    }
  }
  // Phi * proj = -inj and Phi^{-1} * inj = -proj.
  phi_ = to_integer(right_divide(Rational(-1) * inj, proj));
  phi_inv_ = to_integer(right_divide(Rational(-1) * proj, inj));
}

DimVector CoxeterTransform::apply(const DimVector& x) const { return apply_matrix(phi_, x); }

DimVector CoxeterTransform::apply_inverse(const DimVector& x) const {
  return apply_matrix(phi_inv_, x);
}

DimVector CoxeterTransform::power(const DimVector& x, int k) const {
  DimVector y = x;
  for (int s = 0; s < k; ++s) y = apply(y);
  for (int s = 0; s > k; --s) y = apply_inverse(y);
  return y;
}

// ---- Classification --------------------------------------------------------

namespace {

struct UnderlyingGraph {
  std::size_t n = 0;
  std::vector<std::vector<int>> multiplicity;  // symmetric edge multiplicities
  std::vector<int> degree;                     // counts multi-edges
  std::size_t edges = 0;
};

UnderlyingGraph underlying(const Quiver& q) {
  UnderlyingGraph g;
  g.n = q.vertex_count();
  g.multiplicity.assign(g.n, std::vector<int>(g.n, 0));
  g.degree.assign(g.n, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::size_t s = q.source_index(a), t = q.target_index(a);
    ++g.multiplicity[s][t];
    if (s != t) ++g.multiplicity[t][s];
    ++g.degree[s];
    ++g.degree[t];
    ++g.edges;
  }
  return g;
}

// Number of vertices on the arm leaving `center` through `first`, for a tree.
std::size_t arm_length(const UnderlyingGraph& g, std::size_t center, std::size_t first) {
  std::size_t prev = center, cur = first, len = 1;
  while (g.degree[cur] == 2) {
    std::size_t next = g.n;
    for (std::size_t w = 0; w < g.n; ++w)
      if (w != prev && g.multiplicity[cur][w] > 0) next = w;
    prev = cur;
    cur = next;
    ++len;
  }
  return g.degree[cur] == 1 ? len : 0;  // 0: the arm hits another branch point
}

}  // namespace

QuiverClass classify_type(const Quiver& q) {
  UnderlyingGraph g = underlying(q);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v) {
      if (g.multiplicity[u][v] >= 3 || (u == v && g.multiplicity[u][v] > 0)) return QuiverClass::Wild;
      if (g.multiplicity[u][v] == 2) return g.n == 2 && g.edges == 2 ? QuiverClass::Euclidean
                                                                     : QuiverClass::Wild;
    }
  if (g.n == 1) return QuiverClass::Dynkin;
  if (g.edges == g.n) {
    // Connected with one cycle: Euclidean exactly when the whole graph is the cycle.
    bool all_two = std::all_of(g.degree.begin(), g.degree.end(), [](int d) { return d == 2; });
    return all_two ? QuiverClass::Euclidean : QuiverClass::Wild;
  }
  if (g.edges > g.n) return QuiverClass::Wild;

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (g.degree[v] >= 5) return QuiverClass::Wild;
    if (g.degree[v] == 4) {
      // D~4: a single centre with four leaves.
      return (g.n == 5) ? QuiverClass::Euclidean : QuiverClass::Wild;
    }
    if (g.degree[v] == 3) branch.push_back(v);
  }
  if (branch.empty()) return QuiverClass::Dynkin;  // A_n
  if (branch.size() == 1) {
    std::vector<std::size_t> arms;
    for (std::size_t w = 0; w < g.n; ++w)
      if (g.multiplicity[branch[0]][w] > 0) arms.push_back(arm_length(g, branch[0], w));
    std::sort(arms.begin(), arms.end());
    // T(a,b,c): compare 1/(a+1) + 1/(b+1) + 1/(c+1) with 1.
    Rational s = Rational(1, arms[0] + 1) + Rational(1, arms[1] + 1) + Rational(1, arms[2] + 1);
    if (s > 1) return QuiverClass::Dynkin;
    if (s == 1) return QuiverClass::Euclidean;
    return QuiverClass::Wild;
  }
  if (branch.size() == 2) {
    // D~n: both branch points carry two leaves.
    for (std::size_t b : branch) {
      int leaves = 0;
      for (std::size_t w = 0; w < g.n; ++w)
        if (g.multiplicity[b][w] > 0 && g.degree[w] == 1) ++leaves;
      if (leaves != 2) return QuiverClass::Wild;
    }
    return QuiverClass::Euclidean;
  }
  return QuiverClass::Wild;
}

DimVector null_root(const Quiver& q) {
  if (classify_type(q) != QuiverClass::Euclidean)
    throw std::invalid_argument("null_root: quiver is not Euclidean");
  const std::size_t n = q.vertex_count();
  RationalMatrix sym(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    DimVector eu(n);
    eu[u] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      DimVector ev(n);
      ev[v] = 1;
      sym(u, v) = static_cast<long>(euler_form(q, eu, ev) + euler_form(q, ev, eu));
    }
  }
  auto kernel = kernel_basis(sym);
  if (kernel.size() != 1) throw std::logic_error("null_root: radical is not one-dimensional");
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& x : kernel[0]) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  DimVector delta(n);
  for (std::size_t v = 0; v < n; ++v) {
    Rational scaled = kernel[0][v] * lcm_den;
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  bool negative = false;
  for (std::size_t v = 0; v < n; ++v) {
    Rational scaled = kernel[0][v] * lcm_den / gcd_num;
    delta[v] = scaled.get_num().get_si();
    if (delta[v] < 0) negative = true;
  }
  return negative ? -delta : delta;
}

long long defect(const Quiver& q, const DimVector& x) { return euler_form(q, null_root(q), x); }

// ---- Named quivers ---------------------------------------------------------

Quiver kronecker(int m) {
  if (m < 1) throw std::invalid_argument("kronecker: m must be at least 1");
  std::vector<Arrow> arrows;
  for (int k = 1; k <= m; ++k) arrows.push_back(Arrow{2, 1, "a" + std::to_string(k)});
  return Quiver({1, 2}, std::move(arrows));
}

Quiver canonical_apq(int p, int q) {
  if (p < 1 || q < p) throw std::invalid_argument("canonical_apq: need 1 <= p <= q");
  const int source = p + q - 1;
  std::vector<VertexLabel> vertices(static_cast<std::size_t>(p + q));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<Arrow> arrows;
  // Upper path source -> p-1 -> ... -> 1 -> 0.
  std::vector<int> upper{source};
  for (int v = p - 1; v >= 1; --v) upper.push_back(v);
  upper.push_back(0);
  // Lower path source -> p+q-2 -> ... -> p -> 0.
  std::vector<int> lower{source};
  for (int v = p + q - 2; v >= p; --v) lower.push_back(v);
  lower.push_back(0);
  for (std::size_t k = 0; k + 1 < upper.size(); ++k)
    arrows.push_back(Arrow{upper[k], upper[k + 1], "u" + std::to_string(k + 1)});
  for (std::size_t k = 0; k + 1 < lower.size(); ++k)
    arrows.push_back(Arrow{lower[k], lower[k + 1], "l" + std::to_string(k + 1)});
  return Quiver(std::move(vertices), std::move(arrows));
}

}  // namespace stratsys
