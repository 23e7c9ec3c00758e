#include "zck/colored_subset.hpp"

#include <bit>
#include <stdexcept>

namespace zck {

std::size_t ColoredSubset::cardinality() const { return static_cast<std::size_t>(std::popcount(mask)); }

ColoredIndexSet::ColoredIndexSet(DimVector alpha) : alpha_(std::move(alpha)) {
  for (std::size_t c = 0; c < alpha_.n.size(); ++c) {
    if (alpha_.n[c] < 0) throw std::invalid_argument("ColoredIndexSet: negative dimension");
    offsets_.push_back(static_cast<std::size_t>(total_));
    total_ += alpha_.n[c];
    for (int s = 0; s < alpha_.n[c]; ++s) color_of_.push_back(c);
  }
  if (total_ > kMaxTotal) throw std::invalid_argument("ColoredIndexSet: |alpha| exceeds 63");
}

std::size_t ColoredIndexSet::flat_index(std::size_t color, int slot) const {
  if (color >= colors() || slot < 1 || slot > alpha_.n[color])
    throw std::out_of_range("ColoredIndexSet: no such slot");
  return offsets_[color] + static_cast<std::size_t>(slot - 1);
}

int ColoredIndexSet::slot_of(std::size_t flat_index) const {
  return static_cast<int>(flat_index - offsets_[color_of_.at(flat_index)]) + 1;
}

ColoredSubset ColoredIndexSet::full() const {
  return {total_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - total_))};
}

std::vector<int> ColoredIndexSet::slots(ColoredSubset s, std::size_t color) const {
  std::vector<int> out;
  for (int k = 1; k <= alpha_.n.at(color); ++k)
    if (s.contains(offsets_[color] + static_cast<std::size_t>(k - 1))) out.push_back(k);
  return out;
}

std::vector<std::size_t> ColoredIndexSet::indices(ColoredSubset s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < total(); ++i)
    if (s.contains(i)) out.push_back(i);
  return out;
}

DimVector ColoredIndexSet::size_of(ColoredSubset s) const {
  DimVector d{std::vector<int>(colors(), 0)};
  for (std::size_t i = 0; i < total(); ++i)
    if (s.contains(i)) ++d.n[color_of_[i]];
  return d;
}

ColoredSubset ColoredIndexSet::from_slots(const std::vector<std::vector<int>>& slots) const {
  if (slots.size() != colors()) throw std::out_of_range("ColoredIndexSet: color count mismatch");
  ColoredSubset s;
  for (std::size_t c = 0; c < slots.size(); ++c)
    for (int k : slots[c]) s.mask |= std::uint64_t{1} << flat_index(c, k);
  return s;
}

std::vector<int> ColoredIndexSet::indicator(ColoredSubset s) const {
  std::vector<int> chi(total(), 0);
  for (std::size_t i = 0; i < total(); ++i) chi[i] = s.contains(i) ? 1 : 0;
  return chi;
}

std::vector<ColoredSubset> subsets_of(const ColoredIndexSet& cis, const std::optional<DimVector>& beta) {
  if (beta && !beta->fits_in(cis.alpha())) throw std::invalid_argument("subsets_of: beta does not fit in alpha");
  std::vector<ColoredSubset> out;
  const std::uint64_t count = std::uint64_t{1} << cis.total();
  for (std::uint64_t m = 0; m < count; ++m) {
    ColoredSubset s{m};
    if (!beta || cis.size_of(s) == *beta) out.push_back(s);
  }
  return out;
}

RegularPointSampler::RegularPointSampler(std::size_t coordinates, std::uint64_t seed)
    : n_(coordinates), engine_(seed) {}

std::vector<Rational> RegularPointSampler::next() {
  // Plain modulo keeps the stream identical across standard libraries.
  const std::uint64_t range = 10 * n_ + 1;
  std::vector<Rational> point;
  std::vector<std::uint64_t> used;
  while (point.size() < n_) {
    std::uint64_t v = engine_() % range;
    bool clash = false;
    for (auto u : used) clash = clash || u == v;
    if (clash) continue;
    used.push_back(v);
    point.emplace_back(static_cast<unsigned long>(v));
  }
  return point;
}

}  // namespace zck
