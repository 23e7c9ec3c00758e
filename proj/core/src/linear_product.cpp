#include "zck/linear_product.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zck {

LinearProduct::LinearProduct(std::size_t nvars, Rational constant)
    : nvars_(nvars), constant_(std::move(constant)) {}

LinearProduct LinearProduct::difference(std::size_t nvars, std::size_t x, std::size_t y, int exponent) {
  LinearProduct p(nvars);
  p.multiply_difference(x, y, exponent);
  return p;
}

void LinearProduct::multiply_difference(std::size_t x, std::size_t y, int exponent) {
  if (x == y) throw std::invalid_argument("LinearProduct: a_x - a_x is zero");
  if (x >= nvars_ || y >= nvars_) throw std::out_of_range("LinearProduct: variable out of range");
  if (exponent == 0) return;
  if (x > y) {
    std::swap(x, y);
    if (exponent % 2 != 0) constant_ = -constant_;
  }
  auto [it, inserted] = exps_.try_emplace({x, y}, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) exps_.erase(it);
  }
}

std::size_t LinearProduct::degree_numerator() const {
  std::size_t d = 0;
  for (const auto& [pair, e] : exps_)
    if (e > 0) d += static_cast<std::size_t>(e);
  return d;
}

std::size_t LinearProduct::degree_denominator() const {
  std::size_t d = 0;
  for (const auto& [pair, e] : exps_)
    if (e < 0) d += static_cast<std::size_t>(-e);
  return d;
}

LinearProduct& LinearProduct::operator*=(const LinearProduct& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("LinearProduct: ring mismatch");
  constant_ *= o.constant_;
  for (const auto& [pair, e] : o.exps_) {
    auto [it, inserted] = exps_.try_emplace(pair, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) exps_.erase(it);
    }
  }
  return *this;
}

LinearProduct LinearProduct::inverse() const {
  if (constant_ == 0) throw DivisionByZero("LinearProduct: inverse of zero");
  LinearProduct r(nvars_, 1 / constant_);
  for (const auto& [pair, e] : exps_) r.exps_.emplace(pair, -e);
  return r;
}

LinearProduct& LinearProduct::operator/=(const LinearProduct& o) { return *this *= o.inverse(); }

namespace {

MPoly expand(std::size_t nvars, const std::map<LinearProduct::Pair, int>& exps, int sign) {
  MPoly result = MPoly::constant(nvars, 1);
  for (const auto& [pair, e] : exps) {
    if (e * sign <= 0) continue;
    result *= MPoly::difference(nvars, pair.first, pair.second).pow(static_cast<unsigned>(std::abs(e)));
  }
  return result;
}

}  // namespace

MPoly LinearProduct::numerator() const { return expand(nvars_, exps_, +1) * constant_; }

MPoly LinearProduct::denominator() const { return expand(nvars_, exps_, -1); }

MPoly LinearProduct::to_mpoly() const {
  if (degree_denominator() != 0) throw std::domain_error("LinearProduct: negative exponent in polynomial");
  return numerator();
}

RatFunc LinearProduct::to_ratfunc() const {
  // Distinct difference forms are coprime, so no cancellation is needed.
  return RatFunc::from_coprime(numerator(), denominator());
}

Rational LinearProduct::evaluate(std::span<const Rational> point) const {
  Rational v = constant_;
  for (const auto& [pair, e] : exps_) {
    Rational base = point[pair.first] - point[pair.second];
    if (base == 0) {
      if (e < 0) throw PoleError("LinearProduct::evaluate: pole at the point");
      return 0;
    }
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) v *= base;
      else v /= base;
    }
  }
  return v;
}

}  // namespace zck
