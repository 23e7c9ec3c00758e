#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zck/colored_subset.hpp"
#include "zck/linear_product.hpp"
#include "zck/mpoly.hpp"
#include "zck/quiver.hpp"
#include "zck/ratfunc.hpp"

namespace zck {

/// Cocharacter of T = prod_i (G_m)^{n_i}: one integer per flat coordinate index.
struct Cocharacter {
  std::vector<int> v;
  auto operator<=>(const Cocharacter&) const = default;
  Cocharacter operator+(const Cocharacter& o) const;
};

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// 0 when k and l have the same sign (zero counts as either), min(|k|, |l|) otherwise.
int d_exponent(int k, int l);

/// Maximum entry of a cocharacter with all entries >= 0; nullopt when some entry is negative.
std::optional<int> rees_level(const Cocharacter& chi);

/// Finite sum of RatFunc multiples of fundamental classes r^chi. With a Rees
/// degree m, every chi in the support satisfies 0 <= chi <= m entrywise.
class CoulombElement {
 public:
  CoulombElement(DimVector alpha, std::optional<int> rees_degree = std::nullopt);

  const DimVector& alpha() const { return alpha_; }
  std::size_t nvars() const { return nvars_; }
  const std::optional<int>& rees_degree() const { return rees_degree_; }
  const std::map<Cocharacter, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * r^chi. Throws std::invalid_argument when chi violates the Rees bound.
  void add_term(const Cocharacter& chi, const RatFunc& coeff);

  CoulombElement& operator+=(const CoulombElement& o);
  friend CoulombElement operator+(CoulombElement a, const CoulombElement& b) { return a += b; }
  /// Equal supports and equal coefficients in the fraction field; Rees degrees must agree.
  bool operator==(const CoulombElement& o) const;

 private:
  DimVector alpha_;
  std::size_t nvars_;
  std::optional<int> rees_degree_;
  std::map<Cocharacter, RatFunc> terms_;
};

/// The abelianized convolution algebra for (T, N_T) of a quiver gauge theory:
///   r^lambda r^mu = prod_xi xi^{d(xi(lambda), xi(mu))} r^{lambda + mu}
/// over the weights xi of N.
class CoulombAlgebra {
 public:
  CoulombAlgebra(Quiver q, DimVector alpha, WeightSign sign = WeightSign::SourceMinusTarget);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& alpha() const { return alpha_; }
  const ColoredIndexSet& index_set() const { return cis_; }
  const std::vector<LinearForm>& weights() const { return weights_; }
  std::size_t nvars() const { return cis_.total(); }

  LinearProduct fc_factors(const Cocharacter& lambda, const Cocharacter& mu) const;
  MPoly fc_coefficient(const Cocharacter& lambda, const Cocharacter& mu) const;

  /// coeff * r^chi.
  CoulombElement generator(const Cocharacter& chi, std::optional<int> rees_degree = std::nullopt) const;
  /// Bilinear product; Rees degrees add when both are present. Throws AmbientMismatch.
  CoulombElement multiply(const CoulombElement& x, const CoulombElement& y) const;

 private:
  Quiver quiver_;
  DimVector alpha_;
  ColoredIndexSet cis_;
  std::vector<LinearForm> weights_;
};

MPoly fc_coefficient(const Quiver& q, const DimVector& alpha, const Cocharacter& lambda, const Cocharacter& mu);
CoulombElement coulomb_mul(const CoulombAlgebra& algebra, const CoulombElement& x, const CoulombElement& y);

/// Equivariant Euler class at the fixed point chi(S):
/// prod_i prod_{j in S_i, l in [n_i] \ S_i} (a^i_j - a^i_l).
LinearProduct euler_factors(const ColoredIndexSet& cis, ColoredSubset s);
MPoly euler_class(const DimVector& alpha, ColoredSubset s);

/// Localized image of [R_{varpi_beta}]: sum over |S| = beta of Eu(S)^{-1} r^{chi(S)},
/// with Rees degree 1 (0 for beta = 0).
CoulombElement localized_class(const DimVector& alpha, const DimVector& beta);

Cocharacter cocharacter_of(const ColoredIndexSet& cis, ColoredSubset s);

}  // namespace zck
