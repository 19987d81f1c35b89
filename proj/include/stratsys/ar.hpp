#pragma once

#include "stratsys/check_report.hpp"
#include "stratsys/representation.hpp"

#include <string>

namespace stratsys {

/// Auslander-Reiten translate: kernel of the Nakayama image of a minimal
/// projective presentation. Zero on projectives.
Representation tau(const Representation& m);

/// Inverse translate, computed as D tau D over the opposite quiver. Zero on injectives.
Representation tau_inv(const Representation& m);

/// tau^k for k >= 0, tau_inv^{-k} for k < 0; stops early at zero.
Representation tau_power(const Representation& m, int k);

struct ArPosition {
  enum class Kind { Preprojective, Preinjective, Regular };
  Kind kind = Kind::Regular;
  VertexLabel vertex = 0;  // meaningful for the orbit kinds
  int k = 0;               // tau^{-k} P_vertex or tau^k I_vertex
  // False when a wild quiver exhausted the iteration cap in both directions.
  bool certified = true;

  std::string to_string() const;
  friend bool operator==(const ArPosition&, const ArPosition&) = default;
};

inline constexpr int kDefaultIterationCap = 64;

/// Position of an indecomposable module in the AR quiver.
///
/// Uses that tau of a non-projective indecomposable is indecomposable with
/// dimension vector Phi(dim M): tau^k M is projective exactly when
/// Phi^{k+1}(dim M) fails to be positive. Euclidean quivers fall back on the
/// sign of the defect, so the cap never decides their answer.
ArPosition ar_position(const Quiver& q, const DimVector& dims, int cap = kDefaultIterationCap);
ArPosition ar_position(const Representation& m, int cap = kDefaultIterationCap);

/// dim Ext^1(X, Y) == dim Hom(Y, tau X) and dim Ext^1(X, Y) == dim Hom(tau^- Y, X).
CheckReport auslander_check(const Representation& x, const Representation& y);

}  // namespace stratsys
