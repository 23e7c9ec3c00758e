#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zck/colored_subset.hpp"
#include "zck/linear_product.hpp"
#include "zck/mpoly.hpp"
#include "zck/quiver.hpp"
#include "zck/ratfunc.hpp"

namespace zck {

/// l(S) = prod_{i < i'} prod_{l in S_i, j in S_i'} (a^i_l - a^i'_j)^{kappa_ii'}
///        * prod_i prod_{l != j in S_i} (a^i_l - a^i_j)^{kappa_ii}
LinearProduct local_factor_factors(const SymMatrix& kappa, const ColoredIndexSet& cis, ColoredSubset s);
RatFunc local_factor(const SymMatrix& kappa, const ColoredIndexSet& cis, ColoredSubset s);

/// l_Q(S): the same-color part with kappa(Q)_ii, and for every arrow i -> i'
/// between distinct vertices a factor (a^i_l - a^i'_j)^{-1} for l in S_i,
/// j in S_i' (oriented target minus source under WeightSign::TargetMinusSource).
LinearProduct local_factor_Q_factors(const Quiver& q, const ColoredIndexSet& cis, ColoredSubset s,
                                     WeightSign sign = WeightSign::SourceMinusTarget);
RatFunc local_factor_Q(const Quiver& q, const ColoredIndexSet& cis, ColoredSubset s,
                       WeightSign sign = WeightSign::SourceMinusTarget);

/// lhs * s^A s^B = rhs * s^{A u B} s^{A n B}, with coprime polynomial
/// coefficients and lhs scaled to coprime integer coefficients with positive
/// leading coefficient.
struct Relation {
  ColoredSubset a;
  ColoredSubset b;
  ColoredSubset join;
  ColoredSubset meet;
  MPoly lhs;
  MPoly rhs;

  bool operator==(const Relation&) const = default;
};

/// Clears the denominator of s^A s^B = ratio * s^{A u B} s^{A n B}.
Relation relation_from_ratio(ColoredSubset a, ColoredSubset b, const LinearProduct& ratio);

/// One relation per unordered pair {A, B} with neither contained in the other
/// (the remaining pairs give {A, B} = {A u B, A n B}), ordered by (mask A, mask B), A < B.
std::vector<Relation> locality_relations(const SymMatrix& kappa, const ColoredIndexSet& cis);
std::vector<Relation> locality_relations(const Quiver& q, const ColoredIndexSet& cis,
                                         WeightSign sign = WeightSign::SourceMinusTarget);

/// Number of unordered pairs of incomparable subsets of an n-set.
std::uint64_t incomparable_pair_count(unsigned n);

/// z_X z_Y = z_U z_V with X + Y = U + V in N[D], {X, Y} != {U, V}; subsets of
/// D = {0..n-1} as bitmasks.
struct SegreEquation {
  std::uint64_t x, y, u, v;
  bool operator==(const SegreEquation&) const = default;
};

struct EnumerationBoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr unsigned kMaxSegreSet = 12;

/// Every Segre equation of (P^1)^n in P^{2^n - 1}, deduplicated, grouped by the
/// multiset X + Y. Throws EnumerationBoundExceeded for n > 12.
std::vector<SegreEquation> segre_equations(unsigned n);

}  // namespace zck
