#pragma once

#include "stratsys/representation.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace stratsys {

/// Tits form q(x) = <x, x>.
long long tits_form(const Quiver& q, const DimVector& x);

/// True iff x is in the Weyl group orbit of a simple root. With multiple
/// arrows q(x) = 1 alone is not enough, e.g. (1,1,2) for 3 arrows 2 -> 1 and one 3 -> 2.
bool is_real_root(const Quiver& q, const DimVector& x);

/// Positive real roots with total dimension at most `total_cap`, ordered by
/// (total, lexicographic).
std::vector<DimVector> real_roots(const Quiver& q, long long total_cap);

/// The exceptional module with dimension vector x (a real root), found as a
/// seeded generic representation. Empty if no attempt was exceptional.
std::optional<Representation> generic_exceptional(std::shared_ptr<const Quiver> q, const DimVector& x,
                                                  int attempts = 6);

}  // namespace stratsys
