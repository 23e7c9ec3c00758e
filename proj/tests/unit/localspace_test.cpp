#include <gtest/gtest.h>

#include <set>

#include "suite.hpp"
#include "zck/linalg.hpp"
#include "zck/local_space.hpp"
#include "zck/symmetric.hpp"

using namespace zck;

namespace {

MPoly diff(std::size_t n, std::size_t x, std::size_t y) { return MPoly::difference(n, x, y); }

// Unordered pairs {{X, Y}, {U, V}} of unordered pairs with X + Y = U + V as
// multisets of elements of D, {X, Y} != {U, V}: found by trying every 4-tuple.
std::size_t brute_force_segre_count(unsigned n) {
  const std::uint64_t m = std::uint64_t{1} << n;
  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  std::set<std::pair<Pair, Pair>> found;
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      for (std::uint64_t u = 0; u < m; ++u)
        for (std::uint64_t v = 0; v < m; ++v) {
          bool same = true;
          for (unsigned k = 0; k < n && same; ++k)
            same = ((x >> k) & 1u) + ((y >> k) & 1u) == ((u >> k) & 1u) + ((v >> k) & 1u);
          if (!same) continue;
          const Pair p{std::min(x, y), std::max(x, y)}, q{std::min(u, v), std::max(u, v)};
          if (p == q) continue;
          found.insert({std::min(p, q), std::max(p, q)});
        }
  return found.size();
}

// Coefficient vector of z_X z_Y - z_U z_V over the quadratic monomials in 2^n variables.
std::vector<Rational> quadric_row(unsigned n, std::uint64_t x, std::uint64_t y, const Rational& cxy,
                                  std::uint64_t u, std::uint64_t v, const Rational& cuv) {
  const std::uint64_t m = std::uint64_t{1} << n;
  auto index = [&](std::uint64_t i, std::uint64_t j) {
    if (i > j) std::swap(i, j);
    return i * m - i * (i - 1) / 2 + (j - i);
  };
  std::vector<Rational> row(m * (m + 1) / 2);
  row[index(x, y)] += cxy;
  row[index(u, v)] -= cuv;
  return row;
}

}  // namespace

TEST(LocalFactor, Examples) {
  const auto k1 = SymMatrix::from_rows({{1}});
  const ColoredIndexSet two(DimVector{{2}});
  for (auto s : subsets_of(two))
    if (s.cardinality() <= 1) EXPECT_EQ(local_factor(k1, two, s), RatFunc(MPoly::constant(2, 1)));
  EXPECT_EQ(local_factor(k1, two, two.full()), RatFunc(-(diff(2, 0, 1).pow(2))));

  const auto a2 = SymMatrix::from_rows({{1, -1}, {-1, 1}});
  const ColoredIndexSet pair(DimVector{{1, 1}});
  EXPECT_EQ(local_factor(a2, pair, pair.full()), RatFunc(MPoly::constant(2, 1), diff(2, 0, 1)));
}

TEST(LocalFactorQ, Examples) {
  const ColoredIndexSet two(DimVector{{2}});
  EXPECT_EQ(local_factor_Q(parse_quiver("vertex v"), two, two.full()), RatFunc(-(diff(2, 0, 1).pow(2))));
  const Quiver jordan = parse_quiver("vertex v\nedge v v");
  const ColoredIndexSet three(DimVector{{3}});
  for (auto s : subsets_of(three)) EXPECT_EQ(local_factor_Q(jordan, three, s), RatFunc(MPoly::constant(3, 1)));
  const Quiver a2 = parse_quiver("vertex 1\nvertex 2\nedge 1 2");
  const ColoredIndexSet pair(DimVector{{1, 1}});
  EXPECT_EQ(local_factor_Q(a2, pair, pair.full()), RatFunc(MPoly::constant(2, 1), diff(2, 0, 1)));
  EXPECT_EQ(local_factor_Q(a2, pair, pair.full(), WeightSign::TargetMinusSource),
            RatFunc(MPoly::constant(2, 1), diff(2, 1, 0)));
}

// l_Q / l(kappa(Q)) is +-1 on every subset.
TEST(LocalFactorQ, DiffersFromKappaVersionBySign) {
  for (const auto& [name, q] : suite::suite_quivers()) {
    const auto kappa = kappa_of(q);
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 4)) {
      const ColoredIndexSet cis(alpha);
      for (auto s : subsets_of(cis)) {
        const auto ratio = local_factor_Q_factors(q, cis, s) / local_factor_factors(kappa, cis, s);
        EXPECT_TRUE(ratio.exponents().empty()) << name;
        EXPECT_TRUE(ratio.constant() == 1 || ratio.constant() == -1) << name;
      }
    }
  }
}

// l(S) is fixed by transpositions inside S_i or inside its complement, so
// l(beta) on the full index set is W^beta-invariant.
TEST(LocalFactor, WeylInvariance) {
  for (const auto& [name, q] : suite::suite_quivers()) {
    const auto kappa = kappa_of(q);
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 4)) {
      const ColoredIndexSet cis(alpha);
      const auto vars = VariableSet::coordinates(q.vertices(), alpha.n);
      const auto all = same_color_transpositions(alpha.n);
      for (auto s : subsets_of(cis)) {
        std::vector<Transposition> preserving;
        for (const auto& t : all) {
          const bool in1 = s.contains(cis.flat_index(t.first.color, t.first.slot));
          const bool in2 = s.contains(cis.flat_index(t.second.color, t.second.slot));
          if (in1 == in2) preserving.push_back(t);
        }
        EXPECT_TRUE(is_invariant(local_factor(kappa, cis, s), preserving, vars)) << name;
      }
      EXPECT_TRUE(is_invariant(local_factor(kappa, cis, cis.full()), all, vars)) << name;
    }
  }
}

TEST(LocalityRelations, Examples) {
  const ColoredIndexSet two(DimVector{{2}});
  const auto rels = locality_relations(SymMatrix::from_rows({{1}}), two);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].a.mask, 1u);
  EXPECT_EQ(rels[0].b.mask, 2u);
  EXPECT_EQ(rels[0].join.mask, 3u);
  EXPECT_EQ(rels[0].meet.mask, 0u);
  EXPECT_EQ(rels[0].lhs, diff(2, 0, 1).pow(2));
  EXPECT_EQ(rels[0].rhs, MPoly::constant(2, -1));

  const auto flat = locality_relations(SymMatrix::from_rows({{0}}), two);
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].lhs, MPoly::constant(2, 1));
  EXPECT_EQ(flat[0].rhs, MPoly::constant(2, 1));

  // the quiver version matches the kappa version up to the sign of the ratio
  const auto viaQ = locality_relations(parse_quiver("vertex v"), two);
  EXPECT_EQ(viaQ, rels);
}

TEST(LocalityRelations, OnlyIncomparablePairsWithCountFromEnumeration) {
  for (unsigned n = 0; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < (1u << n); ++a)
      for (std::uint64_t b = a + 1; b < (1u << n); ++b)
        if ((a & b) != a && (a & b) != b) ++count;
    EXPECT_EQ(incomparable_pair_count(n), count);
  }
  for (const auto& [name, q] : suite::suite_quivers())
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 4)) {
      const ColoredIndexSet cis(alpha);
      const auto rels = locality_relations(q, cis);
      EXPECT_EQ(rels.size(), incomparable_pair_count(cis.total())) << name;
      for (const auto& r : rels) {
        EXPECT_FALSE(r.a.is_subset_of(r.b) || r.b.is_subset_of(r.a));
        EXPECT_LT(r.a.mask, r.b.mask);
        EXPECT_EQ(r.join, r.a | r.b);
        EXPECT_EQ(r.meet, r.a & r.b);
        EXPECT_GT(r.lhs.leading_coefficient(), 0);
      }
    }
}

TEST(Segre, Examples) {
  EXPECT_TRUE(segre_equations(0).empty());
  EXPECT_TRUE(segre_equations(1).empty());
  const auto two = segre_equations(2);
  ASSERT_EQ(two.size(), 1u);
  const SegreEquation e = two[0];
  EXPECT_EQ(std::set<std::uint64_t>({e.x, e.y}), (std::set<std::uint64_t>{1, 2}));
  EXPECT_EQ(std::set<std::uint64_t>({e.u, e.v}), (std::set<std::uint64_t>{3, 0}));
  EXPECT_THROW(segre_equations(kMaxSegreSet + 1), EnumerationBoundExceeded);
}

TEST(Segre, CountMatchesBruteForce) {
  for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(segre_equations(n).size(), brute_force_segre_count(n)) << n;
  EXPECT_EQ(segre_equations(3).size(), 12u);
  for (const auto& e : segre_equations(4)) {
    EXPECT_EQ(e.x & e.y, e.u & e.v);
    EXPECT_EQ(e.x | e.y, e.u | e.v);
  }
}

// With kappa = 0 every l is 1, and the locality relations span the same
// quadrics as the Segre equations.
TEST(Segre, FlatLocalityRelationsSpanSegreIdeal) {
  for (unsigned n = 1; n <= 5; ++n) {
    const ColoredIndexSet cis(DimVector{{static_cast<int>(n)}});
    const auto rels = locality_relations(SymMatrix::from_rows({{0}}), cis);
    RowEchelon local(0), segre(0), joint(0);
    bool first = true;
    for (const auto& r : rels) {
      ASSERT_EQ(r.lhs, MPoly::constant(n, 1));
      ASSERT_EQ(r.rhs, MPoly::constant(n, 1));
      auto row = quadric_row(n, r.a.mask, r.b.mask, 1, r.join.mask, r.meet.mask, 1);
      if (first) local = segre = joint = RowEchelon(row.size()), first = false;
      local.add(row);
      joint.add(row);
    }
    for (const auto& e : segre_equations(n)) {
      auto row = quadric_row(n, e.x, e.y, 1, e.u, e.v, 1);
      if (first) local = segre = joint = RowEchelon(row.size()), first = false;
      segre.add(row);
      joint.add(row);
    }
    EXPECT_EQ(local.rank(), segre.rank()) << n;
    EXPECT_EQ(joint.rank(), segre.rank()) << n;
  }
}
