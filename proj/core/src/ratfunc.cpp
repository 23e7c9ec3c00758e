#include "zck/ratfunc.hpp"

namespace zck {

RatFunc::RatFunc(std::size_t nvars) : num_(nvars), den_(MPoly::constant(nvars, 1)) {}

RatFunc::RatFunc(MPoly numerator)
    : num_(std::move(numerator)), den_(MPoly::constant(num_.nvars(), 1)) {}

RatFunc::RatFunc(MPoly numerator, MPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("RatFunc: ring mismatch");
  cancel_difference_factors();
  normalize_scale();
}

RatFunc RatFunc::from_coprime(MPoly numerator, MPoly denominator) {
  if (denominator.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
  RatFunc r(numerator.nvars());
  r.num_ = std::move(numerator);
  r.den_ = std::move(denominator);
  r.normalize_scale();
  return r;
}

void RatFunc::normalize_scale() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.nvars(), 1);
    return;
  }
  Rational s = den_.primitive_scale();
  if (den_.leading_coefficient() < 0) s = -s;
  if (s != 1) {
    den_ *= s;
    num_ *= s;
  }
}

void RatFunc::cancel_difference_factors() {
  if (num_.is_zero() || den_.is_constant()) return;
  const std::size_t n = num_.nvars();
  MPoly q_num, q_den;
  for (std::size_t x = 0; x < n; ++x) {
    if (!den_.uses_variable(x) || !num_.uses_variable(x)) continue;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!den_.uses_variable(y) || !num_.uses_variable(y)) continue;
      MPoly f = MPoly::difference(n, x, y);
      while (divides(f, den_, &q_den) && divides(f, num_, &q_num)) {
        den_ = std::move(q_den);
        num_ = std::move(q_num);
        if (!den_.uses_variable(x) || !den_.uses_variable(y) || !num_.uses_variable(x)) break;
      }
      if (!den_.uses_variable(x) || !num_.uses_variable(x)) break;
    }
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    Rational s = a.den_.constant_value() * b.den_.constant_value();
    return RatFunc::from_coprime(a.num_ * b.num_ * Rational(1 / s), MPoly::constant(a.nvars(), 1));
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (nvars() != o.nvars()) return false;
  if (num_ == o.num_ && den_ == o.den_) return true;
  return num_ * o.den_ == o.num_ * den_;
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError("RatFunc::evaluate: denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::swap_variables(std::size_t x, std::size_t y) const {
  return RatFunc::from_coprime(num_.swap_variables(x, y), den_.swap_variables(x, y));
}

std::string format(const RatFunc& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) {
    Rational d = f.denominator().constant_value();
    return format(f.numerator() * Rational(1 / d), names);
  }
  return "(" + format(f.numerator(), names) + ")/(" + format(f.denominator(), names) + ")";
}

}  // namespace zck
