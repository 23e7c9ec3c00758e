#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zck {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// `p` or `p/q`, denominator positive.
std::string to_string(const Rational& q);

/// Inverse of `to_string`; accepts an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned n, unsigned k);

}  // namespace zck
