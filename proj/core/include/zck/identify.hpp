#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "zck/colored_subset.hpp"
#include "zck/coulomb.hpp"
#include "zck/linear_product.hpp"
#include "zck/local_space.hpp"
#include "zck/quiver.hpp"
#include "zck/ratfunc.hpp"

namespace zck {

/// Orientation choices on the two sides of the comparison.
struct SignConventions {
  WeightSign weights = WeightSign::SourceMinusTarget;  // T-weights of N (Coulomb side)
  WeightSign local = WeightSign::SourceMinusTarget;    // arrow factors of l_Q (local side)
  bool operator==(const SignConventions&) const = default;
};

/// Both sides of
///   fc(A,B)/fc(AuB,AnB) * Eu(AuB)Eu(AnB)/(Eu(A)Eu(B)) = l_Q(A)l_Q(B)/(l_Q(AuB)l_Q(AnB))
/// as reduced rational functions.
struct IdentityCheck {
  bool holds = false;
  RatFunc lhs;
  RatFunc rhs;
};

/// Precomputes Euler classes and local factors of every colored subset of
/// S^alpha, then checks the structure-constant identity pair by pair.
class IdentityChecker {
 public:
  IdentityChecker(const Quiver& q, const DimVector& alpha, SignConventions conventions = {});

  const ColoredIndexSet& index_set() const { return algebra_.index_set(); }
  const CoulombAlgebra& algebra() const { return algebra_; }

  /// Coulomb-side structure constant of x^A x^B = c * x^{AuB} x^{AnB}.
  LinearProduct coulomb_ratio(ColoredSubset a, ColoredSubset b) const;
  /// Local-side structure constant of s^A s^B = c * s^{AuB} s^{AnB}.
  LinearProduct local_ratio(ColoredSubset a, ColoredSubset b) const;
  IdentityCheck check(ColoredSubset a, ColoredSubset b) const;

 private:
  CoulombAlgebra algebra_;
  std::vector<LinearProduct> euler_;  // indexed by mask
  std::vector<LinearProduct> local_;  // indexed by mask
};

IdentityCheck check_identity(const Quiver& q, const DimVector& alpha, ColoredSubset a, ColoredSubset b,
                             SignConventions conventions = {});

struct IdentityFailure {
  ColoredSubset a;
  ColoredSubset b;
  RatFunc lhs;
  RatFunc rhs;
};

struct IdentityReport {
  Quiver quiver;
  DimVector alpha;
  SignConventions conventions;
  std::uint64_t pairs_checked = 0;
  std::vector<IdentityFailure> failures;  // sorted by (A, B)
  /// On failure: the single convention flips that make every pair pass,
  /// comma-separated ("flip-weights", "flip-local"), or "none". Only the
  /// relative orientation enters the identity, so for a pure orientation
  /// mismatch both flips are listed.
  std::optional<std::string> sign_repair;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  unsigned threads = 1;  // 0: hardware concurrency
  SignConventions conventions{};
  bool diagnose_sign = true;
};

/// check_identity over every unordered pair {A, B} of colored subsets (A = B
/// included), in (mask A, mask B) order. The result does not depend on the
/// thread count.
IdentityReport verify_all(const Quiver& q, const DimVector& alpha, const VerifyOptions& options = {});

/// Coulomb-side relations x^A x^B = ratio * x^{AuB} x^{AnB}, cleared like locality relations.
std::vector<Relation> coulomb_relations(const Quiver& q, const DimVector& alpha,
                                        SignConventions conventions = {});

/// Signed multiset of ordered same-color slot pairs: (color, l, j) -> multiplicity,
/// standing for prod (a^color_l - a^color_j)^multiplicity.
using SuppMultiset = std::map<std::tuple<std::size_t, int, int>, int>;

struct SuppVerdict {
  SuppMultiset euler_ledger;  // Eu(A)Eu(B) / (Eu(AuB)Eu(AnB))
  SuppMultiset local_ledger;  // l(AuB)l(AnB) / (l(A)l(B))
  SuppMultiset expected;      // (C x E) u (E x C), C = A \ B, E = B \ A
  bool agrees = false;        // all three coincide
};

struct SuppOracleUnavailable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Index-set bookkeeping for an edge-free quiver, without polynomial arithmetic.
/// Throws SuppOracleUnavailable when the quiver has edges.
SuppVerdict supp_oracle(const Quiver& q, const DimVector& alpha, ColoredSubset a, ColoredSubset b);

/// Relation with coefficients evaluated at a point.
struct NumericRelation {
  ColoredSubset a, b, join, meet;
  Rational lhs, rhs;
  bool degenerate() const { return lhs == 0 && rhs == 0; }
};

struct FiberSpecialization {
  std::vector<NumericRelation> relations;
  std::vector<std::size_t> degenerate;  // positions of relations that became 0 = 0
};

/// Evaluates relation coefficients at a point of C^alpha.
FiberSpecialization specialize_fiber(const std::vector<Relation>& relations, const std::vector<Rational>& point);

struct SegreVerdict {
  bool accepted = false;
  std::string reason;
  std::vector<Rational> scaling;  // u_S indexed by mask
};

/// Accepts iff, after a diagonal substitution z_S -> u_S z_S with nonzero
/// rationals, the relations span the same space of quadrics as the Segre
/// equations of (P^1)^n. The u_S are pinned by the relations themselves,
/// starting from u_empty = u_{p} = 1.
SegreVerdict compare_with_segre(const std::vector<NumericRelation>& relations, unsigned n);

}  // namespace zck
