#pragma once

#include "stratsys/representation.hpp"

#include <optional>
#include <vector>

namespace stratsys {

/// A morphism of representations: one d_Y(v) x d_X(v) matrix per vertex.
using Morphism = std::vector<RationalMatrix>;

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Basis of Hom(X, Y) as the kernel of the intertwiner system
/// f_t * X_a = Y_a * f_s over all arrows a: s -> t.
HomSpace hom_space(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

/// True iff f_t * X_a == Y_a * f_s for every arrow.
bool is_morphism(const Representation& x, const Representation& y, const Morphism& f);

/// dim Ext^1(X, Y) = dim Hom(X, Y) - <dim X, dim Y>.
std::size_t ext1_dim(const Representation& x, const Representation& y);

/// Minimal projective presentation 0 -> P1 -> P0 -> M -> 0.
///
/// P0 is a direct sum of P_{top[k]} (vertex indices), one per chosen top
/// generator of M. P1 is a direct sum of P_{relation_vertex[j]}, and the
/// generator of its j-th summand maps to the element of P0 whose component
/// in the k-th summand is sum_p relations[j][k][p] * p, p running over
/// paths_between(top[k], relation_vertex[j]).
struct Presentation {
  std::vector<std::size_t> top;
  std::vector<RationalMatrix> top_vectors;  // column vector in M at vertex top[k]
  std::vector<std::size_t> relation_vertex;
  std::vector<std::vector<RationalVector>> relations;
};

Presentation minimal_presentation(const Representation& m);

/// dim Ext^1(X, Y) as the cokernel of Hom(P0, Y) -> Hom(P1, Y).
std::size_t ext1_dim_direct(const Representation& x, const Representation& y);
std::size_t ext1_dim_direct(const Presentation& px, const Representation& y);
/// dim Hom(X, Y) as the kernel of the same map.
std::size_t hom_dim_via_presentation(const Presentation& px, const Representation& y);

bool is_brick(const Representation& x);
/// Brick without self-extensions; certifies indecomposability over a path algebra.
bool is_exceptional(const Representation& x);

/// Searches Hom(X, Y) for an invertible element, trying deterministic
/// pseudo-random combinations of the basis. A false answer with
/// dim Hom(X, Y) > 0 is probabilistic.
std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y);
bool is_isomorphic(const Representation& x, const Representation& y);

/// Cocycles eta = (eta_a : X_s -> Y_t) whose classes form a basis of
/// Ext^1(X, Y), computed as a complement of the coboundary image.
std::vector<std::vector<RationalMatrix>> ext1_cocycles(const Representation& x, const Representation& y);

/// Middle term of the extension 0 -> Y -> Z -> X -> 0 given by a cocycle.
Representation extension_middle(const Representation& y, const Representation& x,
                                 const std::vector<RationalMatrix>& cocycle);

/// Subrepresentation spanned at each vertex by the columns of bases[v],
/// which must be invariant under the arrow maps.
Representation subrepresentation(const Representation& n, const std::vector<RationalMatrix>& bases);

/// Kernel of a morphism as a subrepresentation of its source.
Representation kernel_of(const Representation& source, const Morphism& f);

}  // namespace stratsys
