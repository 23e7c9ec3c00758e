#include "zck/coulomb.hpp"

#include <algorithm>
#include <cstdlib>

namespace zck {

Cocharacter Cocharacter::operator+(const Cocharacter& o) const {
  if (v.size() != o.v.size()) throw AmbientMismatch("Cocharacter: length mismatch");
  Cocharacter r = *this;
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

int d_exponent(int k, int l) {
  if ((k > 0 && l < 0) || (k < 0 && l > 0)) return std::min(std::abs(k), std::abs(l));
  return 0;
}

std::optional<int> rees_level(const Cocharacter& chi) {
  int m = 0;
  for (int x : chi.v) {
    if (x < 0) return std::nullopt;
    m = std::max(m, x);
  }
  return m;
}

CoulombElement::CoulombElement(DimVector alpha, std::optional<int> rees_degree)
    : alpha_(std::move(alpha)), nvars_(static_cast<std::size_t>(alpha_.total())), rees_degree_(rees_degree) {
  if (rees_degree_ && *rees_degree_ < 0) throw std::invalid_argument("CoulombElement: negative Rees degree");
}

void CoulombElement::add_term(const Cocharacter& chi, const RatFunc& coeff) {
  if (chi.v.size() != nvars_) throw AmbientMismatch("CoulombElement: cocharacter length mismatch");
  if (coeff.nvars() != nvars_) throw AmbientMismatch("CoulombElement: coefficient ring mismatch");
  if (rees_degree_) {
    auto level = rees_level(chi);
    if (!level || *level > *rees_degree_)
      throw std::invalid_argument("CoulombElement: cocharacter outside the Rees filtration level");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(chi, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoulombElement& CoulombElement::operator+=(const CoulombElement& o) {
  if (o.alpha_ != alpha_) throw AmbientMismatch("CoulombElement: dimension vectors differ");
  if (o.rees_degree_ != rees_degree_) throw std::invalid_argument("CoulombElement: Rees degrees differ");
  for (const auto& [chi, c] : o.terms_) add_term(chi, c);
  return *this;
}

bool CoulombElement::operator==(const CoulombElement& o) const {
  if (alpha_ != o.alpha_ || rees_degree_ != o.rees_degree_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

CoulombAlgebra::CoulombAlgebra(Quiver q, DimVector alpha, WeightSign sign)
    : quiver_(std::move(q)), alpha_(std::move(alpha)), cis_(alpha_), weights_(weights_of_N(quiver_, alpha_, sign)) {}

LinearProduct CoulombAlgebra::fc_factors(const Cocharacter& lambda, const Cocharacter& mu) const {
  if (lambda.v.size() != nvars() || mu.v.size() != nvars())
    throw AmbientMismatch("fc: cocharacter length mismatch");
  LinearProduct p(nvars());
  for (const auto& xi : weights_) {
    int k = lambda.v[xi.plus] - lambda.v[xi.minus];
    int l = mu.v[xi.plus] - mu.v[xi.minus];
    if (int d = d_exponent(k, l); d > 0) p.multiply_difference(xi.plus, xi.minus, d);
  }
  return p;
}

MPoly CoulombAlgebra::fc_coefficient(const Cocharacter& lambda, const Cocharacter& mu) const {
  return fc_factors(lambda, mu).to_mpoly();
}

CoulombElement CoulombAlgebra::generator(const Cocharacter& chi, std::optional<int> rees_degree) const {
  CoulombElement x(alpha_, rees_degree);
  x.add_term(chi, RatFunc(MPoly::constant(nvars(), 1)));
  return x;
}

CoulombElement CoulombAlgebra::multiply(const CoulombElement& x, const CoulombElement& y) const {
  if (x.alpha() != alpha_ || y.alpha() != alpha_) throw AmbientMismatch("coulomb_mul: ambient mismatch");
  std::optional<int> degree;
  if (x.rees_degree() && y.rees_degree()) degree = *x.rees_degree() + *y.rees_degree();
  CoulombElement out(alpha_, degree);
  for (const auto& [lambda, a] : x.terms())
    for (const auto& [mu, b] : y.terms()) {
      RatFunc fc(fc_coefficient(lambda, mu));
      out.add_term(lambda + mu, fc * a * b);
    }
  return out;
}

MPoly fc_coefficient(const Quiver& q, const DimVector& alpha, const Cocharacter& lambda, const Cocharacter& mu) {
  return CoulombAlgebra(q, alpha).fc_coefficient(lambda, mu);
}

CoulombElement coulomb_mul(const CoulombAlgebra& algebra, const CoulombElement& x, const CoulombElement& y) {
  return algebra.multiply(x, y);
}

LinearProduct euler_factors(const ColoredIndexSet& cis, ColoredSubset s) {
  LinearProduct p(cis.total());
  for (std::size_t j = 0; j < cis.total(); ++j) {
    if (!s.contains(j)) continue;
    for (std::size_t l = 0; l < cis.total(); ++l)
      if (!s.contains(l) && cis.color_of(l) == cis.color_of(j)) p.multiply_difference(j, l, 1);
  }
  return p;
}

MPoly euler_class(const DimVector& alpha, ColoredSubset s) {
  return euler_factors(ColoredIndexSet(alpha), s).to_mpoly();
}

Cocharacter cocharacter_of(const ColoredIndexSet& cis, ColoredSubset s) { return {cis.indicator(s)}; }

CoulombElement localized_class(const DimVector& alpha, const DimVector& beta) {
  const ColoredIndexSet cis(alpha);
  const bool trivial = beta.total() == 0;
  CoulombElement x(alpha, trivial ? 0 : 1);
  for (auto s : subsets_of(cis, beta)) x.add_term(cocharacter_of(cis, s), euler_factors(cis, s).inverse().to_ratfunc());
  return x;
}

}  // namespace zck
