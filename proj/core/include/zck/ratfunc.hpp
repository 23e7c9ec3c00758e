#pragma once

#include <span>
#include <string>
#include <vector>

#include "zck/mpoly.hpp"

namespace zck {

/// Reduced fraction of two MPolys over the same ring.
///
/// Reduction cancels every common factor of the form (a_x - a_y) between two
/// variables of the ring, then scales so the denominator has coprime integer
/// coefficients and a positive leading coefficient. Every denominator that
/// arises from products of difference forms is therefore fully reduced.
class RatFunc {
 public:
  explicit RatFunc(std::size_t nvars = 0);
  explicit RatFunc(MPoly numerator);
  /// Throws DivisionByZero for a zero denominator.
  RatFunc(MPoly numerator, MPoly denominator);
  /// Assumes the pair is already coprime; only normalizes scale and sign.
  static RatFunc from_coprime(MPoly numerator, MPoly denominator);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DivisionByZero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Exact equality as elements of the fraction field.
  bool operator==(const RatFunc& o) const;

  /// Throws PoleError when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;
  RatFunc swap_variables(std::size_t x, std::size_t y) const;

 private:
  MPoly num_;
  MPoly den_;

  void normalize_scale();
  void cancel_difference_factors();
};

/// "num" or "(num)/(den)" in canonical polynomial text.
std::string format(const RatFunc& f, const std::vector<std::string>& names);

}  // namespace zck
