#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zck/rational.hpp"

namespace zck {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonExactDivision : std::domain_error {
  using std::domain_error::domain_error;
};
/// Evaluation hit a vanishing denominator: the point is outside the domain of definition.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are stored flat (one exponent row of width nvars() per term) and
/// kept sorted by descending lexicographic order of the exponent rows, so
/// term 0 is the leading term and two equal polynomials have identical
/// storage. Zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  /// a_x - a_y.
  static MPoly difference(std::size_t nvars, std::size_t x, std::size_t y);
  static MPoly monomial(const Monomial& exps, const Rational& c);
  /// Builds from unsorted, possibly repeated terms.
  static MPoly from_terms(std::size_t nvars, const std::map<Monomial, Rational>& terms);

  std::size_t nvars() const { return nvars_; }
  std::size_t term_count() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  /// Throws when the polynomial is not constant.
  Rational constant_value() const;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Rational& coefficient(std::size_t term) const { return coeffs_[term]; }
  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient_of(std::span<const Exponent> exps) const;
  const Rational& leading_coefficient() const;

  std::size_t total_degree() const;
  /// Degree in one variable.
  Exponent degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& o) const;

  MPoly pow(unsigned k) const;

  /// Rational value at a point given as one value per variable.
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable v by images[v]; images share one target ring.
  MPoly substitute(std::span<const MPoly> images, std::size_t target_nvars) const;
  /// Exchanges two variables.
  MPoly swap_variables(std::size_t x, std::size_t y) const;
  /// Re-embeds into a ring with more variables; index i maps to i.
  MPoly extend(std::size_t new_nvars) const;

  /// Positive rational c such that c*p has coprime integer coefficients.
  Rational primitive_scale() const;

 private:
  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coeffs_;

  void push_term(std::span<const Exponent> e, Rational c);
  void check_same_ring(const MPoly& o) const;
  friend MPoly merge_add(const MPoly& a, const MPoly& b, int sign);
  friend MPoly exact_div(const MPoly& f, const MPoly& g);
};

/// Exact quotient f/g. Throws DivisionByZero, or NonExactDivision when g does not divide f.
MPoly exact_div(const MPoly& f, const MPoly& g);
/// Quotient when g divides f exactly, otherwise nothing.
bool divides(const MPoly& g, const MPoly& f, MPoly* quotient = nullptr);

/// Canonical text: terms by descending monomial order, variables by name,
/// rationals as p/q, e.g. "a_1_1^2 - 2*a_1_1*a_1_2 + 1/2".
std::string format(const MPoly& p, const std::vector<std::string>& names);
/// Parses the canonical text form (and mild variants: arbitrary spacing, repeated factors).
MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& names);

}  // namespace zck
