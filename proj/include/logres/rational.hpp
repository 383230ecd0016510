#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace logres {

using Rational = mpq_class;
using Integer = mpz_class;

// Natural numbers extended by infinity; orders and invariants use this encoding.
inline constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

std::string to_string(const Rational& q);
std::string natural_or_infinity(unsigned value);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

// Exact k-th root if one exists in Q.
std::optional<Rational> rational_root(const Rational& x, unsigned k);

// x^q for rational q; throws std::domain_error when the result is irrational.
Rational rational_power(const Rational& x, const Rational& q);

}  // namespace logres
