#pragma once

#include "stratsys/check_report.hpp"
#include "stratsys/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stratsys {

using VertexLabel = int;

struct Arrow {
  VertexLabel source;
  VertexLabel target;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Integer vector indexed by the vertices of a quiver (in vertex-list order).
/// Dimension vectors are the nonnegative ones; Coxeter images may be negative.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : entries_(n, 0) {}
  DimVector(std::initializer_list<long long> values) : entries_(values) {}
  explicit DimVector(std::vector<long long> values) : entries_(std::move(values)) {}

  std::size_t size() const { return entries_.size(); }
  long long& operator[](std::size_t k) { return entries_[k]; }
  long long operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<long long>& entries() const { return entries_; }

  long long total() const;
  bool is_nonnegative() const;
  bool is_positive() const;  // nonnegative and nonzero
  bool is_zero() const;

  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(long long s, DimVector a);
  friend DimVector operator-(DimVector a);
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

  std::string to_string() const;

 private:
  std::vector<long long> entries_;
};

enum class QuiverClass { Dynkin, Euclidean, Wild };
std::string to_string(QuiverClass c);

/// Finite directed multigraph with caller-chosen integer vertex labels.
/// Construction does not enforce the quiver invariants; see validate().
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<VertexLabel> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_vertex(VertexLabel v) const { return index_.count(v) != 0; }
  /// Position of a vertex label in vertices(); throws on unknown labels.
  std::size_t index_of(VertexLabel v) const;
  std::size_t source_index(std::size_t arrow) const { return index_of(arrows_[arrow].source); }
  std::size_t target_index(std::size_t arrow) const { return index_of(arrows_[arrow].target); }
  std::optional<std::size_t> arrow_index(const std::string& label) const;

  /// The same vertices with every arrow reversed (labels kept).
  Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<Arrow> arrows_;
  std::map<VertexLabel, std::size_t> index_;
};

/// Passes iff the quiver is finite, acyclic, connected, has distinct arrow
/// labels and no dangling endpoints. The first violated invariant is named
/// by the report's first violation.
CheckReport validate(const Quiver& q);

/// Vertex labels in admissible order: position k (0-based) gets number k+1,
/// and every arrow j -> i has number(j) > number(i). Among the available
/// sinks the smallest label is numbered first.
std::vector<VertexLabel> admissible_numbering(const Quiver& q);

/// <x, y> = sum_v x_v y_v - sum_{a: s->t} x_s y_t.
long long euler_form(const Quiver& q, const DimVector& x, const DimVector& y);

/// Number of paths from `from` to `to` (trivial path included when equal).
long long path_count(const Quiver& q, VertexLabel from, VertexLabel to);
DimVector projective_dim(const Quiver& q, VertexLabel i);
DimVector injective_dim(const Quiver& q, VertexLabel i);

/// Coxeter transformation as an integer matrix acting on column vectors,
/// together with its inverse.
class CoxeterTransform {
 public:
  explicit CoxeterTransform(const Quiver& q);

  DimVector apply(const DimVector& x) const;
  DimVector apply_inverse(const DimVector& x) const;
  /// Phi^k for k >= 0, Phi^{-k} for k < 0.
  DimVector power(const DimVector& x, int k) const;

  const std::vector<std::vector<long long>>& matrix() const { return phi_; }
  const std::vector<std::vector<long long>>& inverse_matrix() const { return phi_inv_; }

 private:
  std::vector<std::vector<long long>> phi_;
  std::vector<std::vector<long long>> phi_inv_;
};

QuiverClass classify_type(const Quiver& q);

/// Positive generator of the radical of the Euler form; only for Euclidean quivers.
DimVector null_root(const Quiver& q);

/// Defect <delta, x>: negative on preprojectives, positive on preinjectives,
/// zero on regular modules. Euclidean quivers only.
long long defect(const Quiver& q, const DimVector& x);

/// Generalized Kronecker quiver: vertices (1, 2), m arrows 2 -> 1 labelled a1..am.
Quiver kronecker(int m);

/// Canonically oriented quiver of type A~(p,q): sink 0, source p+q-1, upper
/// path p+q-1 -> p-1 -> ... -> 1 -> 0 and lower path p+q-1 -> p+q-2 -> ... -> p -> 0.
/// Upper arrows are labelled u1..up and lower arrows l1..lq, numbered from the source.
Quiver canonical_apq(int p, int q);

}  // namespace stratsys
