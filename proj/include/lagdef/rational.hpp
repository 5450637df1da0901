#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lagdef {

/// Exact rational coefficient. GMP keeps every result in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational &r);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace lagdef
