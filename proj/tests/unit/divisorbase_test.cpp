#include <gtest/gtest.h>

#include <set>

#include "suite.hpp"
#include "zck/colored_subset.hpp"
#include "zck/divisor_base.hpp"
#include "zck/linalg.hpp"
#include "zck/symmetric.hpp"

using namespace zck;

namespace {

std::vector<std::uint64_t> masks(const std::vector<ColoredSubset>& v) {
  std::vector<std::uint64_t> m;
  for (auto s : v) m.push_back(s.mask);
  return m;
}

MPoly a(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

}  // namespace

TEST(Subsets, Examples) {
  const ColoredIndexSet two(DimVector{{2}});
  EXPECT_EQ(masks(subsets_of(two, DimVector{{1}})), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(masks(subsets_of(two)), (std::vector<std::uint64_t>{0, 1, 2, 3}));
  const ColoredIndexSet pair(DimVector{{1, 1}});
  EXPECT_EQ(masks(subsets_of(pair, DimVector{{1, 0}})), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(subsets_of(two, DimVector{{3}}), std::invalid_argument);
}

TEST(Subsets, IndexSetBookkeeping) {
  const ColoredIndexSet cis(DimVector{{2, 0, 3}});
  EXPECT_EQ(cis.total(), 5u);
  EXPECT_EQ(cis.flat_index(2, 1), 2u);
  EXPECT_EQ(cis.color_of(4), 2u);
  EXPECT_EQ(cis.slot_of(4), 3);
  const ColoredSubset s = cis.from_slots({{2}, {}, {1, 3}});
  EXPECT_EQ(cis.slots(s, 2), (std::vector<int>{1, 3}));
  EXPECT_EQ(cis.size_of(s).n, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(cis.indicator(s), (std::vector<int>{0, 1, 1, 0, 1}));
  EXPECT_EQ(cis.complement(s).cardinality(), 2u);
  EXPECT_THROW(cis.from_slots({{3}, {}, {}}), std::out_of_range);
  EXPECT_THROW(ColoredIndexSet(DimVector{{64}}), std::invalid_argument);
}

// #{|S| = beta} = prod C(n_i, k_i).
TEST(Subsets, CountsMatchBinomials) {
  for (std::size_t colors = 1; colors <= 3; ++colors)
    for (const auto& alpha : suite::dims_up_to(colors, 6)) {
      const ColoredIndexSet cis(alpha);
      std::vector<int> k(colors, 0);
      while (true) {
        Integer expected = 1;
        for (std::size_t i = 0; i < colors; ++i) expected *= binomial(alpha.n[i], k[i]);
        EXPECT_EQ(subsets_of(cis, DimVector{k}).size(), expected.get_ui());
        std::size_t i = 0;
        while (i < colors && ++k[i] > alpha.n[i]) k[i++] = 0;
        if (i == colors) break;
      }
    }
}

TEST(Sampler, RegularAndSeeded) {
  RegularPointSampler s(6, 42), t(6, 42), u(6, 43);
  const auto p = s.next();
  EXPECT_EQ(p, t.next());
  EXPECT_NE(p, u.next());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) EXPECT_NE(p[i], p[j]);
}

TEST(DiagonalDivisor, Examples) {
  EXPECT_EQ(diagonal_divisor_pullback(0, 0, DimVector{{2}}), -(MPoly::difference(2, 0, 1).pow(2)));
  EXPECT_EQ(diagonal_divisor_pullback(0, 1, DimVector{{1, 1}}), MPoly::difference(2, 0, 1));
  EXPECT_EQ(diagonal_divisor_pullback(0, 0, DimVector{{1}}), MPoly::constant(1, 1));
}

TEST(DiagonalDivisor, SameColorInvariance) {
  for (const auto& alpha : suite::dims_up_to(2, 5)) {
    const auto vars = VariableSet::coordinates({"1", "2"}, alpha.n);
    const auto swaps = same_color_transpositions(alpha.n);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(is_invariant(diagonal_divisor_pullback(i, i, alpha), swaps, vars));
  }
}

TEST(Grassmannian, PresentationExamples) {
  const auto p = gr_presentation(DimVector{{2}}, DimVector{{1}});
  ASSERT_EQ(p.variables.names(), (std::vector<std::string>{"a_1_1", "a_1_2", "c_1_1", "d_1_1"}));
  const std::size_t n = 4;
  const MPoly c = a(n, 2), d = a(n, 3);
  ASSERT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.relations[0], c + d - a(n, 0) - a(n, 1));
  EXPECT_EQ(p.relations[1], c * d - a(n, 0) * a(n, 1));
  EXPECT_EQ(p.rank, 2);

  const auto q = gr_presentation(DimVector{{1}}, DimVector{{0}});
  ASSERT_EQ(q.relations.size(), 1u);
  EXPECT_EQ(q.relations[0], a(2, 1) - a(2, 0));
  EXPECT_EQ(gr_presentation(DimVector{{4}}, DimVector{{2}}).rank, 6);
  EXPECT_THROW(gr_presentation(DimVector{{2}}, DimVector{{3}}), std::invalid_argument);
}

TEST(Grassmannian, RestrictionExamples) {
  const auto p = gr_presentation(DimVector{{2}}, DimVector{{1}});
  const ColoredIndexSet cis(DimVector{{2}});
  const ColoredSubset s1 = cis.from_slots({{1}});
  EXPECT_EQ(gr_restrict_regular(p, p.generators[0], s1), MPoly::variable(2, 0));
  EXPECT_EQ(gr_restrict_regular(p, p.generators[1], s1), MPoly::variable(2, 1));
  EXPECT_THROW(gr_restrict_regular(p, p.generators[0], cis.full()), std::invalid_argument);

  const auto p3 = gr_presentation(DimVector{{3}}, DimVector{{2}});
  const ColoredIndexSet cis3(DimVector{{3}});
  const GrGenerator c2{GrGenerator::Kind::C, 0, 2};
  EXPECT_EQ(gr_restrict_regular(p3, c2, cis3.from_slots({{1, 3}})), MPoly::variable(3, 0) * MPoly::variable(3, 2));
}

// Every relation restricts to zero on every component, for all beta <= alpha.
TEST(Grassmannian, RelationsVanishOnRegularPart) {
  for (std::size_t colors = 1; colors <= 2; ++colors)
    for (const auto& alpha : suite::dims_up_to(colors, colors == 1 ? 6 : 4)) {
      const ColoredIndexSet cis(alpha);
      std::set<std::vector<int>> seen;
      for (auto b : subsets_of(cis)) {
        const DimVector beta = cis.size_of(b);
        if (!seen.insert(beta.n).second) continue;
        const auto pres = gr_presentation(alpha, beta);
        for (auto s : subsets_of(cis, beta))
          for (const auto& r : pres.relations) EXPECT_TRUE(gr_restrict_regular(pres, r, s).is_zero());
      }
    }
}

TEST(Grassmannian, GlobalBasisExamples) {
  const auto p = gr_presentation(DimVector{{2}}, DimVector{{1}});
  const auto basis = global_basis(p);
  EXPECT_EQ(basis.rank, 2u);
  ASSERT_EQ(basis.monomials.size(), 2u);
  EXPECT_EQ(basis.monomials[0], (Monomial{0}));
  EXPECT_EQ(basis.monomials[1], (Monomial{1}));
  const auto m = restriction_matrix(p, basis.monomials, {Rational(3), Rational(5)});
  EXPECT_EQ(m, (std::vector<std::vector<Rational>>{{1, 1}, {3, 5}}));
  EXPECT_EQ(matrix_rank(restriction_matrix(p, basis.monomials, {Rational(2), Rational(2)})), 1u);

  EXPECT_EQ(global_basis(gr_presentation(DimVector{{1}}, DimVector{{1}})).monomials,
            (std::vector<Monomial>{Monomial{0}}));
  EXPECT_EQ(global_basis(gr_presentation(DimVector{{4}}, DimVector{{2}})).rank, 6u);
}

TEST(Grassmannian, GlobalBasisCertifiedAtSampledPoints) {
  for (const auto& alpha : suite::dims_up_to(2, 5)) {
    const ColoredIndexSet cis(alpha);
    for (int k0 = 0; k0 <= alpha.n[0]; ++k0)
      for (int k1 = 0; k1 <= alpha.n[1]; ++k1) {
        const DimVector beta{{k0, k1}};
        const auto pres = gr_presentation(alpha, beta);
        const auto basis = global_basis(pres, 5);
        ASSERT_EQ(Integer(basis.rank), pres.rank);
        RegularPointSampler sampler(cis.total(), 99);
        for (int t = 0; t < 3; ++t)
          EXPECT_EQ(matrix_rank(restriction_matrix(pres, basis.monomials, sampler.next())), basis.rank);
      }
  }
}
