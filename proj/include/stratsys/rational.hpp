#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace stratsys {

/// Exact rational scalar; always kept in canonical (reduced) form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace stratsys
