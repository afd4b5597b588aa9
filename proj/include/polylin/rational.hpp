#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polylin {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Lowest-terms copy. gmpxx leaves Rational(p, q) unreduced, and GMP
/// arithmetic on unreduced values is undefined.
inline Rational canonical(Rational value) {
    value.canonicalize();
    return value;
}

/// Parses "7", "-3", "2/3", "-1.25" or ".5". Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

/// Exact decimal expansion when the reduced denominator is of the form
/// 2^a 5^b, e.g. 5/4 -> "1.25". Empty for non-terminating values.
std::optional<std::string> to_exact_decimal(const Rational& value);

} // namespace polylin
