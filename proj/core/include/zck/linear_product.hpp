#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "zck/mpoly.hpp"
#include "zck/ratfunc.hpp"

namespace zck {

/// c * prod (a_x - a_y)^e over variable pairs x < y, with integer exponents.
///
/// This is the factored form of every Euler class, local factor and BFN
/// coefficient in the library. Since the factors are pairwise non-associate
/// irreducibles, the (constant, exponent map) pair is a unique factorization:
/// two LinearProducts are equal as rational functions iff they compare equal.
class LinearProduct {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  explicit LinearProduct(std::size_t nvars = 0, Rational constant = 1);

  /// (a_x - a_y)^exponent; orientation x > y is folded into the sign.
  static LinearProduct difference(std::size_t nvars, std::size_t x, std::size_t y, int exponent = 1);

  std::size_t nvars() const { return nvars_; }
  const Rational& constant() const { return constant_; }
  /// Nonzero exponents keyed by (x, y) with x < y.
  const std::map<Pair, int>& exponents() const { return exps_; }
  bool is_zero() const { return constant_ == 0; }
  std::size_t degree_numerator() const;
  std::size_t degree_denominator() const;

  LinearProduct& operator*=(const LinearProduct& o);
  LinearProduct& operator/=(const LinearProduct& o);
  friend LinearProduct operator*(LinearProduct a, const LinearProduct& b) { return a *= b; }
  friend LinearProduct operator/(LinearProduct a, const LinearProduct& b) { return a /= b; }
  LinearProduct inverse() const;
  /// Multiplies by (a_x - a_y)^exponent.
  void multiply_difference(std::size_t x, std::size_t y, int exponent);

  bool operator==(const LinearProduct&) const = default;

  /// Expanded product of the positive-exponent part (times the constant).
  MPoly numerator() const;
  /// Expanded product of the negative-exponent part.
  MPoly denominator() const;
  /// Throws std::domain_error when a negative exponent is present.
  MPoly to_mpoly() const;
  RatFunc to_ratfunc() const;

  Rational evaluate(std::span<const Rational> point) const;

 private:
  std::size_t nvars_;
  Rational constant_;
  std::map<Pair, int> exps_;
};

}  // namespace zck
