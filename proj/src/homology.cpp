#include "stratsys/homology.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace stratsys {

namespace {

void require_same_quiver(const Representation& x, const Representation& y) {
  if (!(x.quiver() == y.quiver())) throw std::invalid_argument("representations over different quivers");
}

std::size_t dim(const Representation& m, std::size_t v) { return static_cast<std::size_t>(m.dim_at(v)); }

// Coboundary delta: (f_v)_v -> (f_t X_a - Y_a f_s)_a. Columns index the
// entries of the f_v (row-major, vertex by vertex); rows index the entries
// of the arrow components.
struct Coboundary {
  RationalMatrix matrix;
  std::vector<std::size_t> vertex_offset;
  std::vector<std::size_t> arrow_offset;
};

Coboundary coboundary(const Representation& x, const Representation& y) {
  const Quiver& q = x.quiver();
  Coboundary d;
  std::size_t cols = 0, rows = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    d.vertex_offset.push_back(cols);
    cols += dim(y, v) * dim(x, v);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    d.arrow_offset.push_back(rows);
    rows += dim(y, q.target_index(a)) * dim(x, q.source_index(a));
  }
  d.matrix = RationalMatrix(rows, cols);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.source_index(a), t = q.target_index(a);
    const RationalMatrix& xa = x.map(a);
    const RationalMatrix& ya = y.map(a);
    const std::size_t ys = dim(y, s), yt = dim(y, t), xs = dim(x, s), xt = dim(x, t);
    for (std::size_t r = 0; r < yt; ++r)
      for (std::size_t c = 0; c < xs; ++c) {
        const std::size_t row = d.arrow_offset[a] + r * xs + c;
        // + sum_k f_t[r,k] X_a[k,c]
        for (std::size_t k = 0; k < xt; ++k)
          if (!is_zero(xa(k, c))) d.matrix(row, d.vertex_offset[t] + r * xt + k) += xa(k, c);
        // - sum_k Y_a[r,k] f_s[k,c]
        for (std::size_t k = 0; k < ys; ++k)
          if (!is_zero(ya(r, k))) d.matrix(row, d.vertex_offset[s] + k * xs + c) -= ya(r, k);
      }
  }
  return d;
}

Morphism unpack(const Representation& x, const Representation& y, const Coboundary& d,
                const RationalVector& flat) {
  Morphism f;
  for (std::size_t v = 0; v < x.quiver().vertex_count(); ++v) {
    RationalMatrix m(dim(y, v), dim(x, v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat[d.vertex_offset[v] + r * m.cols() + c];
    f.push_back(std::move(m));
  }
  return f;
}

}  // namespace

HomSpace hom_space(const Representation& x, const Representation& y) {
  require_same_quiver(x, y);
  Coboundary d = coboundary(x, y);
  HomSpace h;
  for (const auto& k : kernel_basis(d.matrix)) h.basis.push_back(unpack(x, y, d, k));
  return h;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
  require_same_quiver(x, y);
  Coboundary d = coboundary(x, y);
  return d.matrix.cols() - rank(d.matrix);
}

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
  const Quiver& q = x.quiver();
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f[v].rows() != dim(y, v) || f[v].cols() != dim(x, v)) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!(f[q.target_index(a)] * x.map(a) == y.map(a) * f[q.source_index(a)])) return false;
  return true;
}

std::size_t ext1_dim(const Representation& x, const Representation& y) {
  long long e = static_cast<long long>(hom_dim(x, y)) - euler_form(x.quiver(), x.dims(), y.dims());
  if (e < 0) throw std::logic_error("negative Ext dimension");
  return static_cast<std::size_t>(e);
}

// ---- Minimal projective presentation ---------------------------------------

namespace {

// Basis of (P0)_w as pairs (summand k, position of the path in paths_between(top[k], w)).
struct SumOfProjectives {
  const Quiver* q;
  std::vector<std::size_t> tops;
  std::vector<std::vector<std::vector<Path>>> paths;       // [k][w]
  std::vector<std::vector<std::size_t>> offset;            // [w][k]
  std::vector<std::size_t> dimension;                      // [w]

  SumOfProjectives(const Quiver& quiver, std::vector<std::size_t> top) : q(&quiver), tops(std::move(top)) {
    const std::size_t n = q->vertex_count();
    paths.resize(tops.size());
    offset.assign(n, std::vector<std::size_t>(tops.size(), 0));
    dimension.assign(n, 0);
    for (std::size_t k = 0; k < tops.size(); ++k) {
      paths[k].resize(n);
      for (std::size_t w = 0; w < n; ++w) paths[k][w] = paths_between(*q, tops[k], w);
    }
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t k = 0; k < tops.size(); ++k) {
        offset[w][k] = dimension[w];
        dimension[w] += paths[k][w].size();
      }
  }

  // Matrix of the arrow action (P0)_s -> (P0)_t.
  RationalMatrix arrow_matrix(std::size_t a) const {
    const std::size_t s = q->source_index(a), t = q->target_index(a);
    RationalMatrix m(dimension[t], dimension[s]);
    for (std::size_t k = 0; k < tops.size(); ++k)
      for (std::size_t c = 0; c < paths[k][s].size(); ++c) {
        auto extended = paths[k][s][c].arrows;
        extended.push_back(a);
        for (std::size_t r = 0; r < paths[k][t].size(); ++r)
          if (paths[k][t][r].arrows == extended) m(offset[t][k] + r, offset[s][k] + c) = 1;
      }
    return m;
  }
};

RationalMatrix columns_of(const std::vector<RationalVector>& vs, std::size_t rows) {
  return RationalMatrix::from_columns(rows, vs);
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

// Columns of `candidates` that extend the span of `base`, chosen greedily.
std::vector<std::size_t> complement_columns(const RationalMatrix& base, const RationalMatrix& candidates) {
  std::vector<std::size_t> chosen;
  if (candidates.cols() == 0 || candidates.rows() == 0) return chosen;
  for (std::size_t p : independent_columns(hstack(base, candidates)))
    if (p >= base.cols()) chosen.push_back(p - base.cols());
  return chosen;
}

}  // namespace

Presentation minimal_presentation(const Representation& m) {
  const Quiver& q = m.quiver();
  const std::size_t n = q.vertex_count();
  Presentation out;

  // Top of M: complement of the radical (sum of images of incoming arrows).
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = dim(m, v);
    if (d == 0) continue;
    RationalMatrix radical(d, 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.target_index(a) == v) radical = hstack(radical, m.map(a));
    for (std::size_t e : complement_columns(radical, RationalMatrix::identity(d))) {
      RationalMatrix g(d, 1);
      g(e, 0) = 1;
      out.top.push_back(v);
      out.top_vectors.push_back(std::move(g));
    }
  }

  SumOfProjectives p0(q, out.top);
  // Kernel of P0 -> M at each vertex.
  std::vector<RationalMatrix> kernel(n);
  for (std::size_t w = 0; w < n; ++w) {
    RationalMatrix pi(dim(m, w), p0.dimension[w]);
    for (std::size_t k = 0; k < out.top.size(); ++k)
      for (std::size_t c = 0; c < p0.paths[k][w].size(); ++c) {
        RationalMatrix image = m.path_map(p0.paths[k][w][c].arrows, out.top[k]) * out.top_vectors[k];
        for (std::size_t r = 0; r < image.rows(); ++r) pi(r, p0.offset[w][k] + c) = image(r, 0);
      }
    kernel[w] = columns_of(kernel_basis(pi), p0.dimension[w]);
  }
  // Radical of the kernel, then its top: the generators of P1.
  std::vector<RationalMatrix> radical(n);
  for (std::size_t w = 0; w < n; ++w) radical[w] = RationalMatrix(p0.dimension[w], 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.source_index(a), t = q.target_index(a);
    if (kernel[s].cols() == 0) continue;
    radical[t] = hstack(radical[t], p0.arrow_matrix(a) * kernel[s]);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t c : complement_columns(radical[u], kernel[u])) {
      out.relation_vertex.push_back(u);
      std::vector<RationalVector> coeffs(out.top.size());
      for (std::size_t k = 0; k < out.top.size(); ++k) {
        coeffs[k].resize(p0.paths[k][u].size());
        for (std::size_t r = 0; r < coeffs[k].size(); ++r) coeffs[k][r] = kernel[u](p0.offset[u][k] + r, c);
      }
      out.relations.push_back(std::move(coeffs));
    }
  }
  return out;
}

namespace {

// Matrix of Hom(P0, Y) -> Hom(P1, Y), phi -> phi o f.
RationalMatrix restriction_map(const Presentation& px, const Representation& y) {
  const Quiver& q = y.quiver();
  std::vector<std::size_t> col_off, row_off;
  std::size_t cols = 0, rows = 0;
  for (std::size_t v : px.top) {
    col_off.push_back(cols);
    cols += dim(y, v);
  }
  for (std::size_t u : px.relation_vertex) {
    row_off.push_back(rows);
    rows += dim(y, u);
  }
  RationalMatrix m(rows, cols);
  for (std::size_t j = 0; j < px.relation_vertex.size(); ++j)
    for (std::size_t k = 0; k < px.top.size(); ++k) {
      const auto& coeffs = px.relations[j][k];
      bool any = false;
      for (const auto& c : coeffs) any = any || !is_zero(c);
      if (!any) continue;
      auto paths = paths_between(q, px.top[k], px.relation_vertex[j]);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        if (is_zero(coeffs[p])) continue;
        RationalMatrix yp = y.path_map(paths[p].arrows, px.top[k]);
        for (std::size_t r = 0; r < yp.rows(); ++r)
          for (std::size_t c = 0; c < yp.cols(); ++c)
            if (!is_zero(yp(r, c))) m(row_off[j] + r, col_off[k] + c) += coeffs[p] * yp(r, c);
      }
    }
  return m;
}

}  // namespace

std::size_t ext1_dim_direct(const Presentation& px, const Representation& y) {
  RationalMatrix m = restriction_map(px, y);
  return m.rows() - rank(m);
}

std::size_t hom_dim_via_presentation(const Presentation& px, const Representation& y) {
  RationalMatrix m = restriction_map(px, y);
  return m.cols() - rank(m);
}

std::size_t ext1_dim_direct(const Representation& x, const Representation& y) {
  require_same_quiver(x, y);
  return ext1_dim_direct(minimal_presentation(x), y);
}

bool is_brick(const Representation& x) { return !x.is_zero() && hom_dim(x, x) == 1; }

bool is_exceptional(const Representation& x) { return is_brick(x) && ext1_dim(x, x) == 0; }

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y) {
  require_same_quiver(x, y);
  if (x.dims() != y.dims()) return std::nullopt;
  HomSpace h = hom_space(x, y);
  if (h.basis.empty()) {
    if (x.is_zero()) return Morphism(x.quiver().vertex_count());
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> dist(1, 997);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Morphism f = h.basis.front();
    for (auto& m : f) m = RationalMatrix(m.rows(), m.cols());
    for (const auto& b : h.basis) {
      Rational c = (attempt == 0 && h.basis.size() == 1) ? Rational(1) : Rational(dist(rng));
      for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + c * b[v];
    }
    bool invertible = true;
    for (const auto& m : f) invertible = invertible && (m.rows() == 0 || m.is_invertible());
    if (invertible) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& x, const Representation& y) {
  return find_isomorphism(x, y).has_value();
}

std::vector<std::vector<RationalMatrix>> ext1_cocycles(const Representation& x, const Representation& y) {
  require_same_quiver(x, y);
  const Quiver& q = x.quiver();
  Coboundary d = coboundary(x, y);
  const std::size_t rows = d.matrix.rows();
  std::vector<std::vector<RationalMatrix>> out;
  for (std::size_t e : complement_columns(d.matrix, RationalMatrix::identity(rows))) {
    std::vector<RationalMatrix> eta;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const std::size_t xs = dim(x, q.source_index(a)), yt = dim(y, q.target_index(a));
      RationalMatrix m(yt, xs);
      for (std::size_t r = 0; r < yt; ++r)
        for (std::size_t c = 0; c < xs; ++c)
          if (d.arrow_offset[a] + r * xs + c == e) m(r, c) = 1;
      eta.push_back(std::move(m));
    }
    out.push_back(std::move(eta));
  }
  return out;
}

Representation extension_middle(const Representation& y, const Representation& x,
                                 const std::vector<RationalMatrix>& cocycle) {
  require_same_quiver(x, y);
  const Quiver& q = x.quiver();
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.source_index(a), t = q.target_index(a);
    RationalMatrix lower_left(dim(x, t), dim(y, s));
    maps.push_back(block(y.map(a), cocycle[a], lower_left, x.map(a)));
  }
  return Representation(x.quiver_ptr(), y.dims() + x.dims(), std::move(maps));
}

Representation subrepresentation(const Representation& n, const std::vector<RationalMatrix>& bases) {
  const Quiver& q = n.quiver();
  DimVector dims(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[v] = static_cast<long long>(bases[v].cols());
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.source_index(a), t = q.target_index(a);
    if (bases[s].cols() == 0 || bases[t].cols() == 0) {
      maps.emplace_back(bases[t].cols(), bases[s].cols());
      continue;
    }
    auto x = solve_matrix(bases[t], n.map(a) * bases[s]);
    if (!x) throw std::logic_error("subrepresentation: subspace is not invariant");
    maps.push_back(std::move(*x));
  }
  return Representation(n.quiver_ptr(), std::move(dims), std::move(maps));
}

Representation kernel_of(const Representation& source, const Morphism& f) {
  std::vector<RationalMatrix> bases;
  for (std::size_t v = 0; v < source.quiver().vertex_count(); ++v)
    bases.push_back(RationalMatrix::from_columns(dim(source, v), kernel_basis(f[v])));
  return subrepresentation(source, bases);
}

}  // namespace stratsys
