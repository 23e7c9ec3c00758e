#include "zck/divisor_base.hpp"

#include <algorithm>
#include <functional>

#include "zck/linalg.hpp"
#include "zck/linear_product.hpp"
#include "zck/symmetric.hpp"

namespace zck {

MPoly diagonal_divisor_pullback(std::size_t i, std::size_t i_prime, const DimVector& alpha) {
  const ColoredIndexSet cis(alpha);
  LinearProduct p(cis.total());
  for (int l = 1; l <= alpha.n.at(i); ++l)
    for (int j = 1; j <= alpha.n.at(i_prime); ++j) {
      if (i == i_prime && l == j) continue;
      p.multiply_difference(cis.flat_index(i, l), cis.flat_index(i_prime, j), 1);
    }
  return p.to_mpoly();
}

std::size_t GrPresentation::variable_of(const GrGenerator& g) const {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& h = generators[k];
    if (h.kind == g.kind && h.color == g.color && h.index == g.index) return coordinate_count() + k;
  }
  throw std::out_of_range("GrPresentation: no such generator");
}

GrPresentation gr_presentation(const DimVector& alpha, const DimVector& beta,
                               const std::vector<std::string>& color_names) {
  if (!beta.fits_in(alpha)) throw std::invalid_argument("gr_presentation: beta does not fit in alpha");
  std::vector<std::string> names = color_names;
  if (names.empty())
    for (std::size_t c = 0; c < alpha.n.size(); ++c) names.push_back(std::to_string(c + 1));

  GrPresentation pres;
  pres.alpha = alpha;
  pres.beta = beta;
  pres.variables = VariableSet::coordinates(names, alpha.n);
  pres.rank = 1;
  for (std::size_t c = 0; c < alpha.n.size(); ++c) {
    pres.rank *= binomial(static_cast<unsigned>(alpha.n[c]), static_cast<unsigned>(beta.n[c]));
    for (int l = 1; l <= beta.n[c]; ++l) {
      pres.variables.append_symbol("c_" + names[c] + "_" + std::to_string(l));
      pres.generators.push_back({GrGenerator::Kind::C, c, l});
    }
  }
  for (std::size_t c = 0; c < alpha.n.size(); ++c)
    for (int j = 1; j <= alpha.n[c] - beta.n[c]; ++j) {
      pres.variables.append_symbol("d_" + names[c] + "_" + std::to_string(j));
      pres.generators.push_back({GrGenerator::Kind::D, c, j});
    }

  const std::size_t nv = pres.variables.size();
  const ColoredIndexSet cis(alpha);
  for (std::size_t c = 0; c < alpha.n.size(); ++c) {
    const int n = alpha.n[c], k = beta.n[c];
    std::vector<std::size_t> coords;
    for (int r = 1; r <= n; ++r) coords.push_back(cis.flat_index(c, r));
    auto c_gen = [&](int l) {
      return l == 0 ? MPoly::constant(nv, 1) : MPoly::variable(nv, pres.variable_of({GrGenerator::Kind::C, c, l}));
    };
    auto d_gen = [&](int j) {
      return j == 0 ? MPoly::constant(nv, 1) : MPoly::variable(nv, pres.variable_of({GrGenerator::Kind::D, c, j}));
    };
    for (int s = 1; s <= n; ++s) {
      MPoly rel(nv);
      for (int l = std::max(0, s - (n - k)); l <= std::min(s, k); ++l) rel += c_gen(l) * d_gen(s - l);
      rel -= elem_sym(static_cast<unsigned>(s), coords, nv);
      pres.relations.push_back(std::move(rel));
      pres.relation_labels.emplace_back(c, s);
    }
  }
  return pres;
}

namespace {

void check_size(const GrPresentation& pres, ColoredSubset s) {
  if (ColoredIndexSet(pres.alpha).size_of(s) != pres.beta)
    throw std::invalid_argument("gr_restrict_regular: |S| does not match beta");
}

MPoly generator_image(const GrPresentation& pres, const ColoredIndexSet& cis, const GrGenerator& gen,
                      ColoredSubset s) {
  std::vector<std::size_t> in, out;
  for (int r = 1; r <= pres.alpha.n.at(gen.color); ++r) {
    std::size_t idx = cis.flat_index(gen.color, r);
    (s.contains(idx) ? in : out).push_back(idx);
  }
  const auto& vars = gen.kind == GrGenerator::Kind::C ? in : out;
  return elem_sym(static_cast<unsigned>(gen.index), vars, cis.total());
}

}  // namespace

MPoly gr_restrict_regular(const GrPresentation& pres, const GrGenerator& gen, ColoredSubset s) {
  check_size(pres, s);
  pres.variable_of(gen);  // validates the generator
  return generator_image(pres, ColoredIndexSet(pres.alpha), gen, s);
}

MPoly gr_restrict_regular(const GrPresentation& pres, const MPoly& p, ColoredSubset s) {
  check_size(pres, s);
  const ColoredIndexSet cis(pres.alpha);
  const std::size_t n = cis.total();
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < n; ++v) images.push_back(MPoly::variable(n, v));
  for (const auto& g : pres.generators) images.push_back(generator_image(pres, cis, g, s));
  return p.substitute(images, n);
}

std::vector<std::vector<Rational>> restriction_matrix(const GrPresentation& pres,
                                                      const std::vector<Monomial>& monomials,
                                                      const std::vector<Rational>& point) {
  const ColoredIndexSet cis(pres.alpha);
  const auto comps = subsets_of(cis, pres.beta);
  std::vector<std::size_t> c_vars;
  for (std::size_t k = 0; k < pres.generators.size(); ++k)
    if (pres.generators[k].kind == GrGenerator::Kind::C) c_vars.push_back(k);

  // values[S][m] = e_l(S_i) at the point for the m-th c generator.
  std::vector<std::vector<Rational>> values;
  for (auto s : comps) {
    std::vector<Rational> row;
    for (std::size_t k : c_vars) {
      const auto& g = pres.generators[k];
      std::vector<Rational> e(static_cast<std::size_t>(g.index) + 1, Rational(0));
      e[0] = 1;
      for (int r = 1; r <= pres.alpha.n[g.color]; ++r) {
        std::size_t idx = cis.flat_index(g.color, r);
        if (!s.contains(idx)) continue;
        for (std::size_t q = e.size() - 1; q >= 1; --q) e[q] += point[idx] * e[q - 1];
      }
      row.push_back(e.back());
    }
    values.push_back(std::move(row));
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& m : monomials) {
    if (m.size() != c_vars.size()) throw std::invalid_argument("restriction_matrix: monomial width mismatch");
    std::vector<Rational> row;
    for (std::size_t col = 0; col < comps.size(); ++col) {
      Rational v = 1;
      for (std::size_t k = 0; k < m.size(); ++k)
        for (Exponent t = 0; t < m[k]; ++t) v *= values[col][k];
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Exponent vectors of width m and total degree d, descending lex.
void compositions(std::size_t m, unsigned d, std::vector<Monomial>& out) {
  Monomial cur(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == m) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned x = left + 1; x-- > 0;) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  if (m == 0) {
    if (d == 0) out.push_back(cur);
    return;
  }
  rec(0, d);
}

}  // namespace

GlobalBasis global_basis(const GrPresentation& pres, std::uint64_t seed, int max_points) {
  std::size_t c_count = 0;
  for (const auto& g : pres.generators) c_count += g.kind == GrGenerator::Kind::C ? 1 : 0;
  unsigned degree_bound = 0;
  for (std::size_t c = 0; c < pres.alpha.n.size(); ++c)
    degree_bound += static_cast<unsigned>(pres.beta.n[c] * (pres.alpha.n[c] - pres.beta.n[c]));
  const std::size_t target = pres.rank.get_ui();

  std::vector<Monomial> candidates;
  for (unsigned d = 0; d <= degree_bound; ++d) compositions(c_count, d, candidates);

  RegularPointSampler sampler(pres.coordinate_count(), seed);
  for (int attempt = 0; attempt < max_points; ++attempt) {
    GlobalBasis basis;
    basis.point = sampler.next();
    auto rows = restriction_matrix(pres, candidates, basis.point);
    RowEchelon echelon(target);
    for (std::size_t k = 0; k < candidates.size() && echelon.rank() < target; ++k) {
      if (echelon.add(rows[k])) basis.monomials.push_back(candidates[k]);
    }
    basis.rank = echelon.rank();
    if (basis.rank == target) return basis;
  }
  throw CertificationFailed("global_basis: restriction matrix never reached full rank");
}

}  // namespace zck
