#include "stratsys/ar.hpp"

#include "stratsys/homology.hpp"

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>

namespace stratsys {

namespace {

// Basis of (I_i)_w, memoised per (w, i).
class PathTable {
 public:
  explicit PathTable(const Quiver& q) : q_(q) {}
  const std::vector<Path>& operator()(std::size_t from, std::size_t to) {
    auto key = std::make_pair(from, to);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, paths_between(q_, from, to)).first;
    return it->second;
  }

 private:
  const Quiver& q_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> cache_;
};

}  // namespace

Representation tau(const Representation& m) {
  const auto& qp = m.quiver_ptr();
  const Quiver& q = *qp;
  if (m.is_zero()) return Representation::zero(qp);
  Presentation pres = minimal_presentation(m);
  if (pres.relation_vertex.empty()) return Representation::zero(qp);

  std::vector<Representation> nu1, nu0;
  for (std::size_t u : pres.relation_vertex) nu1.push_back(injective(qp, q.vertices()[u]));
  for (std::size_t v : pres.top) nu0.push_back(injective(qp, q.vertices()[v]));
  Representation source = direct_sum(nu1);

  const std::size_t n = q.vertex_count();
  PathTable paths(q);
  Morphism f;
  for (std::size_t w = 0; w < n; ++w) {
    // Offsets of the summands at vertex w.
    std::vector<std::size_t> col_off, row_off;
    std::size_t cols = 0, rows = 0;
    for (std::size_t u : pres.relation_vertex) {
      col_off.push_back(cols);
      cols += paths(w, u).size();
    }
    for (std::size_t v : pres.top) {
      row_off.push_back(rows);
      rows += paths(w, v).size();
    }
    RationalMatrix fw(rows, cols);
    for (std::size_t j = 0; j < pres.relation_vertex.size(); ++j) {
      const std::size_t u = pres.relation_vertex[j];
      const auto& into_u = paths(w, u);
      for (std::size_t k = 0; k < pres.top.size(); ++k) {
        const std::size_t v = pres.top[k];
        const auto& coeffs = pres.relations[j][k];
        const auto& generator_paths = paths(v, u);
        const auto& into_v = paths(w, v);
        // nu(p) : I_u -> I_v at w sends phi to (r -> phi(r then p)).
        for (std::size_t pi = 0; pi < generator_paths.size(); ++pi) {
          if (is_zero(coeffs[pi])) continue;
          for (std::size_t r = 0; r < into_v.size(); ++r) {
            auto composite = into_v[r].arrows;
            composite.insert(composite.end(), generator_paths[pi].arrows.begin(), generator_paths[pi].arrows.end());
            for (std::size_t s = 0; s < into_u.size(); ++s)
              if (into_u[s].arrows == composite) {
                fw(row_off[k] + r, col_off[j] + s) += coeffs[pi];
                break;
              }
          }
        }
      }
    }
    f.push_back(std::move(fw));
  }
  return kernel_of(source, f);
}

Representation tau_inv(const Representation& m) {
  auto opposite = std::make_shared<const Quiver>(m.quiver().opposite());
  Representation t = tau(m.dual(opposite));
  return t.dual(m.quiver_ptr());
}

Representation tau_power(const Representation& m, int k) {
  Representation x = m;
  for (int s = 0; s < k && !x.is_zero(); ++s) x = tau(x);
  for (int s = 0; s > k && !x.is_zero(); --s) x = tau_inv(x);
  return x;
}

std::string ArPosition::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Preprojective: out << "Preprojective(" << vertex << "," << k << ")"; break;
    case Kind::Preinjective: out << "Preinjective(" << vertex << "," << k << ")"; break;
    case Kind::Regular: out << (certified ? "Regular" : "Regular(uncertified)"); break;
  }
  return out.str();
}

namespace {

using BigVector = std::vector<mpz_class>;

BigVector phi_step(const std::vector<std::vector<long long>>& m, const BigVector& x) {
  BigVector y(x.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m[r][c] != 0) y[r] += mpz_class(static_cast<long>(m[r][c])) * x[c];
  return y;
}

bool positive(const BigVector& x) {
  bool nonzero = false;
  for (const auto& e : x) {
    if (sgn(e) < 0) return false;
    if (sgn(e) > 0) nonzero = true;
  }
  return nonzero;
}

std::optional<VertexLabel> matching_vertex(const Quiver& q, const BigVector& x, bool projective) {
  for (VertexLabel v : q.vertices()) {
    DimVector d = projective ? projective_dim(q, v) : injective_dim(q, v);
    bool same = true;
    for (std::size_t k = 0; k < d.size() && same; ++k) same = (x[k] == mpz_class(static_cast<long>(d[k])));
    if (same) return v;
  }
  return std::nullopt;
}

// Walks Phi (forward) or Phi^{-1} (backward) until the next image stops being
// positive; returns the orbit coordinate, or nullopt when `limit` is reached.
std::optional<ArPosition> walk(const Quiver& q, const CoxeterTransform& phi, const DimVector& dims, bool forward,
                               long long limit) {
  BigVector x;
  for (long long e : dims.entries()) x.emplace_back(static_cast<long>(e));
  const auto& m = forward ? phi.matrix() : phi.inverse_matrix();
  for (long long k = 0; limit < 0 || k <= limit; ++k) {
    BigVector next = phi_step(m, x);
    if (!positive(next)) {
      auto v = matching_vertex(q, x, forward);
      if (!v) throw std::logic_error("ar_position: orbit does not end at a projective or injective; input decomposable?");
      ArPosition pos;
      pos.kind = forward ? ArPosition::Kind::Preprojective : ArPosition::Kind::Preinjective;
      pos.vertex = *v;
      pos.k = static_cast<int>(k);
      return pos;
    }
    x = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

ArPosition ar_position(const Quiver& q, const DimVector& dims, int cap) {
  if (!dims.is_positive()) throw std::invalid_argument("ar_position: zero or negative dimension vector");
  CoxeterTransform phi(q);
  const QuiverClass cls = classify_type(q);
  if (cls == QuiverClass::Euclidean) {
    long long d = defect(q, dims);
    if (d == 0) return ArPosition{};
    // The orbit is guaranteed to end, so no cap applies.
    return *walk(q, phi, dims, d < 0, -1);
  }
  if (auto p = walk(q, phi, dims, true, cap)) return *p;
  if (cls == QuiverClass::Dynkin) throw std::logic_error("ar_position: Dynkin orbit exceeded the cap");
  if (auto p = walk(q, phi, dims, false, cap)) return *p;
  ArPosition regular;
  regular.certified = false;
  return regular;
}

ArPosition ar_position(const Representation& m, int cap) { return ar_position(m.quiver(), m.dims(), cap); }

CheckReport auslander_check(const Representation& x, const Representation& y) {
  CheckReport report("auslander formula");
  const long long ext = static_cast<long long>(ext1_dim(x, y));
  const long long via_tau = static_cast<long long>(hom_dim(y, tau(x)));
  const long long via_tau_inv = static_cast<long long>(hom_dim(tau_inv(y), x));
  if (ext != via_tau)
    report.fail(Violation{"ext_vs_hom_tau", std::nullopt, std::nullopt, via_tau,
                          "dim Ext^1(X,Y) = " + std::to_string(ext) + " but dim Hom(Y, tau X) = " +
                              std::to_string(via_tau)});
  if (ext != via_tau_inv)
    report.fail(Violation{"ext_vs_hom_tau_inv", std::nullopt, std::nullopt, via_tau_inv,
                          "dim Ext^1(X,Y) = " + std::to_string(ext) + " but dim Hom(tau^- Y, X) = " +
                              std::to_string(via_tau_inv)});
  report.note("dim Ext^1(X,Y) = " + std::to_string(ext));
  return report;
}

}  // namespace stratsys
