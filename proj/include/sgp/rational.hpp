#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sgp {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0). Anything else, including decimal
/// points and exponents, throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational dot(const Vector& a, const Vector& b);

}  // namespace sgp
