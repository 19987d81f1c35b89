#pragma once

#include "stratsys/matrix.hpp"
#include "stratsys/quiver.hpp"

#include <memory>
#include <set>
#include <vector>

namespace stratsys {

/// Finite-dimensional representation: a vector space K^{d_v} at each vertex
/// and, for each arrow a: s -> t, a d_t x d_s matrix.
class Representation {
 public:
  Representation() = default;
  /// Validates every map shape against the dimension vector.
  Representation(std::shared_ptr<const Quiver> quiver, DimVector dims, std::vector<RationalMatrix> maps);

  /// The zero representation.
  static Representation zero(std::shared_ptr<const Quiver> quiver);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  long long dim_at(std::size_t vertex_index) const { return dims_[vertex_index]; }
  long long total_dim() const { return dims_.total(); }
  bool is_zero() const { return dims_.is_zero(); }

  const std::vector<RationalMatrix>& maps() const { return maps_; }
  const RationalMatrix& map(std::size_t arrow) const { return maps_[arrow]; }

  /// Composite matrix along a path given as arrow indices in traversal order.
  RationalMatrix path_map(const std::vector<std::size_t>& path, std::size_t start_vertex) const;

  /// Dual representation over the opposite quiver (transposed maps).
  Representation dual(std::shared_ptr<const Quiver> opposite) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return *a.quiver_ == *b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  std::shared_ptr<const Quiver> quiver_;
  DimVector dims_;
  std::vector<RationalMatrix> maps_;
};

/// A path in an acyclic quiver: arrow indices in traversal order.
struct Path {
  std::size_t source;   // vertex index
  std::size_t target;   // vertex index
  std::vector<std::size_t> arrows;
};

/// All paths from vertex index `from` to vertex index `to`, sorted by the
/// sequence of arrow labels (the trivial path first).
std::vector<Path> paths_between(const Quiver& q, std::size_t from, std::size_t to);

Representation simple(std::shared_ptr<const Quiver> q, VertexLabel i);
/// P_i: basis at v is the set of paths i -> v; arrows compose paths.
Representation projective(std::shared_ptr<const Quiver> q, VertexLabel i);
/// I_i: basis at v is dual to the set of paths v -> i.
Representation injective(std::shared_ptr<const Quiver> q, VertexLabel i);

Representation direct_sum(const std::vector<Representation>& summands);

std::set<VertexLabel> supp(const Representation& m);
bool is_sincere(const Representation& m);

/// Representation with the given dimension vector and pseudo-random integer
/// matrix entries in [-range, range], seeded deterministically.
Representation random_representation(std::shared_ptr<const Quiver> q, const DimVector& dims,
                                     unsigned long long seed, int range = 3);

}  // namespace stratsys
