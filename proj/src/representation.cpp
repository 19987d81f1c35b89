#include "stratsys/representation.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace stratsys {

Representation::Representation(std::shared_ptr<const Quiver> quiver, DimVector dims,
                               std::vector<RationalMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count())
    throw std::invalid_argument("dimension vector length does not match the quiver");
  if (!dims_.is_nonnegative()) throw std::invalid_argument("negative dimension");
  if (maps_.size() != quiver_->arrow_count())
    throw std::invalid_argument("number of maps does not match the number of arrows");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    auto rows = static_cast<std::size_t>(dims_[quiver_->target_index(a)]);
    auto cols = static_cast<std::size_t>(dims_[quiver_->source_index(a)]);
    if (maps_[a].rows() != rows || maps_[a].cols() != cols)
      throw std::invalid_argument("map for arrow '" + quiver_->arrows()[a].label + "' has shape " +
                                  std::to_string(maps_[a].rows()) + "x" + std::to_string(maps_[a].cols()) +
                                  ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Representation Representation::zero(std::shared_ptr<const Quiver> quiver) {
  std::vector<RationalMatrix> maps(quiver->arrow_count());
  DimVector dims(quiver->vertex_count());
  return Representation(std::move(quiver), std::move(dims), std::move(maps));
}

RationalMatrix Representation::path_map(const std::vector<std::size_t>& path,
                                        std::size_t start_vertex) const {
  auto d = static_cast<std::size_t>(dims_[start_vertex]);
  RationalMatrix m = RationalMatrix::identity(d);
  for (std::size_t a : path) m = maps_[a] * m;
  return m;
}

Representation Representation::dual(std::shared_ptr<const Quiver> opposite) const {
  std::vector<RationalMatrix> maps;
  maps.reserve(maps_.size());
  for (const auto& m : maps_) maps.push_back(m.transposed());
  return Representation(std::move(opposite), dims_, std::move(maps));
}

std::vector<Path> paths_between(const Quiver& q, std::size_t from, std::size_t to) {
  std::vector<Path> out;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == to) out.push_back(Path{from, to, stack});
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.source_index(a) == v) {
        stack.push_back(a);
        walk(q.target_index(a));
        stack.pop_back();
      }
  };
  walk(from);
  std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) {
    return std::lexicographical_compare(
        x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
        [&](std::size_t a, std::size_t b) { return q.arrows()[a].label < q.arrows()[b].label; });
  });
  return out;
}

Representation simple(std::shared_ptr<const Quiver> q, VertexLabel i) {
  DimVector dims(q->vertex_count());
  dims[q->index_of(i)] = 1;
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a)
    maps.emplace_back(static_cast<std::size_t>(dims[q->target_index(a)]),
                      static_cast<std::size_t>(dims[q->source_index(a)]));
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

namespace {

std::size_t position_of(const std::vector<Path>& basis, const std::vector<std::size_t>& arrows) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].arrows == arrows) return k;
  throw std::logic_error("path not found in basis");
}

}  // namespace

Representation projective(std::shared_ptr<const Quiver> q, VertexLabel i) {
  const std::size_t n = q->vertex_count();
  const std::size_t top = q->index_of(i);
  std::vector<std::vector<Path>> basis(n);
  DimVector dims(n);
  for (std::size_t v = 0; v < n; ++v) {
    basis[v] = paths_between(*q, top, v);
    dims[v] = static_cast<long long>(basis[v].size());
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    std::size_t s = q->source_index(a), t = q->target_index(a);
    RationalMatrix m(basis[t].size(), basis[s].size());
    for (std::size_t c = 0; c < basis[s].size(); ++c) {
      auto extended = basis[s][c].arrows;
      extended.push_back(a);
      m(position_of(basis[t], extended), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

Representation injective(std::shared_ptr<const Quiver> q, VertexLabel i) {
  const std::size_t n = q->vertex_count();
  const std::size_t socle = q->index_of(i);
  std::vector<std::vector<Path>> basis(n);
  DimVector dims(n);
  for (std::size_t v = 0; v < n; ++v) {
    basis[v] = paths_between(*q, v, socle);
    dims[v] = static_cast<long long>(basis[v].size());
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    std::size_t s = q->source_index(a), t = q->target_index(a);
    // (I_a phi)(r) = phi(r after a) for r a path t -> i.
    RationalMatrix m(basis[t].size(), basis[s].size());
    for (std::size_t r = 0; r < basis[t].size(); ++r) {
      std::vector<std::size_t> through{a};
      through.insert(through.end(), basis[t][r].arrows.begin(), basis[t][r].arrows.end());
      m(r, position_of(basis[s], through)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& summands) {
  if (summands.empty()) throw std::invalid_argument("direct_sum of an empty list");
  auto q = summands.front().quiver_ptr();
  DimVector dims(q->vertex_count());
  for (const auto& s : summands) {
    if (!(s.quiver() == *q)) throw std::invalid_argument("direct_sum: quiver mismatch");
    dims += s.dims();
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    std::size_t s = q->source_index(a), t = q->target_index(a);
    RationalMatrix m(static_cast<std::size_t>(dims[t]), static_cast<std::size_t>(dims[s]));
    std::size_t r0 = 0, c0 = 0;
    for (const auto& x : summands) {
      const auto& b = x.map(a);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
      r0 += b.rows();
      c0 += b.cols();
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

std::set<VertexLabel> supp(const Representation& m) {
  std::set<VertexLabel> out;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
    if (m.dims()[v] != 0) out.insert(m.quiver().vertices()[v]);
  return out;
}

bool is_sincere(const Representation& m) { return supp(m).size() == m.quiver().vertex_count(); }

Representation random_representation(std::shared_ptr<const Quiver> q, const DimVector& dims,
                                     unsigned long long seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    RationalMatrix m(static_cast<std::size_t>(dims[q->target_index(a)]),
                     static_cast<std::size_t>(dims[q->source_index(a)]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = dist(rng);
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), dims, std::move(maps));
}

}  // namespace stratsys
