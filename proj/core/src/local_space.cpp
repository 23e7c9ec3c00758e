#include "zck/local_space.hpp"

#include <map>

namespace zck {

namespace {

void check_kappa(const SymMatrix& kappa, const ColoredIndexSet& cis) {
  if (kappa.size() != cis.colors()) throw std::invalid_argument("local_factor: kappa size does not match alpha");
}

// prod over ordered pairs l != j of (a_l - a_j)^exponent, for flat indices of one color.
void same_color_part(LinearProduct& p, const std::vector<std::size_t>& idx, int exponent) {
  if (exponent == 0) return;
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = 0; y < idx.size(); ++y)
      if (x != y) p.multiply_difference(idx[x], idx[y], exponent);
}

std::vector<std::size_t> color_indices(const ColoredIndexSet& cis, ColoredSubset s, std::size_t color) {
  std::vector<std::size_t> out;
  for (int k : cis.slots(s, color)) out.push_back(cis.flat_index(color, k));
  return out;
}

}  // namespace

LinearProduct local_factor_factors(const SymMatrix& kappa, const ColoredIndexSet& cis, ColoredSubset s) {
  check_kappa(kappa, cis);
  LinearProduct p(cis.total());
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t c = 0; c < cis.colors(); ++c) parts.push_back(color_indices(cis, s, c));
  for (std::size_t i = 0; i < cis.colors(); ++i) {
    same_color_part(p, parts[i], kappa(i, i));
    for (std::size_t k = i + 1; k < cis.colors(); ++k) {
      if (kappa(i, k) == 0) continue;
      for (auto l : parts[i])
        for (auto j : parts[k]) p.multiply_difference(l, j, kappa(i, k));
    }
  }
  return p;
}

RatFunc local_factor(const SymMatrix& kappa, const ColoredIndexSet& cis, ColoredSubset s) {
  return local_factor_factors(kappa, cis, s).to_ratfunc();
}

LinearProduct local_factor_Q_factors(const Quiver& q, const ColoredIndexSet& cis, ColoredSubset s, WeightSign sign) {
  if (q.vertex_count() != cis.colors()) throw std::invalid_argument("local_factor_Q: quiver does not match alpha");
  LinearProduct p(cis.total());
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t c = 0; c < cis.colors(); ++c) parts.push_back(color_indices(cis, s, c));
  for (std::size_t i = 0; i < cis.colors(); ++i) same_color_part(p, parts[i], 1 - q.loops_at(i));
  for (const auto& e : q.edges()) {
    if (e.is_loop()) continue;
    for (auto l : parts[e.source])
      for (auto j : parts[e.target]) {
        if (sign == WeightSign::SourceMinusTarget) p.multiply_difference(l, j, -1);
        else p.multiply_difference(j, l, -1);
      }
  }
  return p;
}

RatFunc local_factor_Q(const Quiver& q, const ColoredIndexSet& cis, ColoredSubset s, WeightSign sign) {
  return local_factor_Q_factors(q, cis, s, sign).to_ratfunc();
}

Relation relation_from_ratio(ColoredSubset a, ColoredSubset b, const LinearProduct& ratio) {
  RatFunc r = ratio.to_ratfunc();
  return Relation{a, b, a | b, a & b, r.denominator(), r.numerator()};
}

namespace {

template <typename FactorFn>
std::vector<Relation> relations_with(const ColoredIndexSet& cis, FactorFn factor) {
  const auto all = subsets_of(cis);
  std::vector<LinearProduct> l;
  l.reserve(all.size());
  for (auto s : all) l.push_back(factor(s));
  // subsets_of enumerates masks 0..2^n-1, so l[mask] is l(S).
  std::vector<Relation> out;
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      ColoredSubset a = all[x], b = all[y];
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      LinearProduct ratio = l[a.mask] * l[b.mask] / (l[(a | b).mask] * l[(a & b).mask]);
      out.push_back(relation_from_ratio(a, b, ratio));
    }
  return out;
}

}  // namespace

std::vector<Relation> locality_relations(const SymMatrix& kappa, const ColoredIndexSet& cis) {
  check_kappa(kappa, cis);
  return relations_with(cis, [&](ColoredSubset s) { return local_factor_factors(kappa, cis, s); });
}

std::vector<Relation> locality_relations(const Quiver& q, const ColoredIndexSet& cis, WeightSign sign) {
  return relations_with(cis, [&](ColoredSubset s) { return local_factor_Q_factors(q, cis, s, sign); });
}

std::uint64_t incomparable_pair_count(unsigned n) {
  // C(2^n, 2) unordered distinct pairs minus the 3^n - 2^n strictly comparable ones.
  std::uint64_t subsets = std::uint64_t{1} << n, three = 1;
  for (unsigned k = 0; k < n; ++k) three *= 3;
  return subsets * (subsets - 1) / 2 - (three - subsets);
}

std::vector<SegreEquation> segre_equations(unsigned n) {
  if (n > kMaxSegreSet) throw EnumerationBoundExceeded("segre_equations: |D| exceeds 12");
  const std::uint64_t count = std::uint64_t{1} << n;
  // X + Y in N[D] is determined by (X u Y, X n Y). The pair with the larger
  // minimum goes left, so z_1 z_2 = z_12 z_0 reads as usual.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::pair<std::uint64_t, std::uint64_t>>> classes;
  for (std::uint64_t x = 0; x < count; ++x)
    for (std::uint64_t y = x; y < count; ++y) classes[{x | y, x & y}].emplace_back(x, y);
  std::vector<SegreEquation> out;
  for (const auto& [key, pairs] : classes)
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        out.push_back({pairs[j].first, pairs[j].second, pairs[i].first, pairs[i].second});
  return out;
}

}  // namespace zck
