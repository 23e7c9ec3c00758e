#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zck/colored_subset.hpp"
#include "zck/mpoly.hpp"
#include "zck/quiver.hpp"
#include "zck/variables.hpp"

namespace zck {

/// Pullback of the diagonal divisor Delta_{i i'} to C^alpha, as a polynomial in
/// the coordinates: prod_{l != j} (a^i_l - a^i_j) when i == i',
/// prod_{l, j} (a^i_l - a^i'_j) otherwise.
MPoly diagonal_divisor_pullback(std::size_t i, std::size_t i_prime, const DimVector& alpha);

/// Generator of the Grassmannian coordinate ring presentation.
struct GrGenerator {
  enum class Kind { C, D };
  Kind kind;
  std::size_t color;
  int index;  // l for c^i_l, j for d^i_j, both 1-based
};

/// O(Gr^beta(T^alpha)) over O(C^alpha): generators c^i_l (1 <= l <= k_i),
/// d^i_j (1 <= j <= n_i - k_i), one relation
///   sum_{l + j = s} c^i_l d^i_j - e_s(a^i_1..a^i_{n_i})     (c_0 = d_0 = 1)
/// for every color i and 1 <= s <= n_i.
struct GrPresentation {
  DimVector alpha;
  DimVector beta;
  /// Coordinates a first, then all c generators, then all d generators.
  VariableSet variables;
  std::vector<GrGenerator> generators;  // parallel to variables past the coordinates
  std::vector<MPoly> relations;
  std::vector<std::pair<std::size_t, int>> relation_labels;  // (color, s)
  Integer rank;  // prod_i C(n_i, k_i)

  std::size_t coordinate_count() const { return variables.coordinate_count(); }
  std::size_t variable_of(const GrGenerator& g) const;
};

/// Throws std::invalid_argument when beta does not fit in alpha.
GrPresentation gr_presentation(const DimVector& alpha, const DimVector& beta,
                               const std::vector<std::string>& color_names = {});

/// Image of a generator on the S-component of the regular part:
/// c^i_l -> e_l(a^i_r, r in S_i), d^i_j -> e_j(a^i_r, r not in S_i).
/// Throws std::invalid_argument when |S| != beta.
MPoly gr_restrict_regular(const GrPresentation& pres, const GrGenerator& gen, ColoredSubset s);
/// Same substitution applied to any polynomial in the presentation ring.
MPoly gr_restrict_regular(const GrPresentation& pres, const MPoly& p, ColoredSubset s);

struct CertificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A basis of O(Gr^beta(T^alpha)) over the base, given as monomials in the c
/// generators (exponent vectors over GrPresentation's c variables, in order),
/// together with the point at which its restriction matrix was found invertible.
struct GlobalBasis {
  std::vector<Monomial> monomials;
  std::vector<Rational> point;
  std::size_t rank = 0;
};

/// Greedy choice over c-monomials by (total degree, descending lex), keeping a
/// monomial when its restriction row (one entry per S with |S| = beta,
/// evaluated at a seeded regular point) is independent of those kept. Tries up
/// to `max_points` points before throwing CertificationFailed.
GlobalBasis global_basis(const GrPresentation& pres, std::uint64_t seed = 0, int max_points = 8);

/// Restriction matrix rows for the given monomials at a point: row p, column S.
std::vector<std::vector<Rational>> restriction_matrix(const GrPresentation& pres,
                                                      const std::vector<Monomial>& monomials,
                                                      const std::vector<Rational>& point);

}  // namespace zck
