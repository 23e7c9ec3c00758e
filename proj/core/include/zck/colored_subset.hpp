#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zck/quiver.hpp"
#include "zck/rational.hpp"

namespace zck {

/// Subset of the colored index set S^alpha, as a bitmask over flat coordinate
/// indices (color-major, slot-minor). Only meaningful together with the
/// ColoredIndexSet it was drawn from.
struct ColoredSubset {
  std::uint64_t mask = 0;

  friend ColoredSubset operator|(ColoredSubset a, ColoredSubset b) { return {a.mask | b.mask}; }
  friend ColoredSubset operator&(ColoredSubset a, ColoredSubset b) { return {a.mask & b.mask}; }
  bool is_subset_of(ColoredSubset o) const { return (mask & ~o.mask) == 0; }
  bool contains(std::size_t flat_index) const { return (mask >> flat_index) & 1u; }
  std::size_t cardinality() const;
  auto operator<=>(const ColoredSubset&) const = default;
};

/// S^alpha = disjoint union over colors i of {1..n_i}.
class ColoredIndexSet {
 public:
  static constexpr int kMaxTotal = 63;

  explicit ColoredIndexSet(DimVector alpha);

  const DimVector& alpha() const { return alpha_; }
  std::size_t colors() const { return alpha_.n.size(); }
  std::size_t total() const { return static_cast<std::size_t>(total_); }
  std::size_t offset(std::size_t color) const { return offsets_[color]; }
  std::size_t flat_index(std::size_t color, int slot) const;
  std::size_t color_of(std::size_t flat_index) const { return color_of_[flat_index]; }
  int slot_of(std::size_t flat_index) const;

  ColoredSubset full() const;
  ColoredSubset complement(ColoredSubset s) const { return {full().mask & ~s.mask}; }
  /// Sorted 1-based slots of color c in s.
  std::vector<int> slots(ColoredSubset s, std::size_t color) const;
  /// Flat indices in s, ascending.
  std::vector<std::size_t> indices(ColoredSubset s) const;
  /// |S| as a dimension vector.
  DimVector size_of(ColoredSubset s) const;
  /// Builds from per-color slot lists; throws std::out_of_range on a bad slot.
  ColoredSubset from_slots(const std::vector<std::vector<int>>& slots) const;
  /// 0/1 cocharacter chi(S).
  std::vector<int> indicator(ColoredSubset s) const;

 private:
  DimVector alpha_;
  int total_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> color_of_;
};

/// All colored subsets (of size beta when given), ordered by mask value.
std::vector<ColoredSubset> subsets_of(const ColoredIndexSet& cis, const std::optional<DimVector>& beta = std::nullopt);

/// Seeded sampler of regular points: integer coordinates in [0, 10*|alpha|],
/// pairwise distinct, so every difference form a_x - a_y is nonzero.
class RegularPointSampler {
 public:
  RegularPointSampler(std::size_t coordinates, std::uint64_t seed);
  std::vector<Rational> next();

 private:
  std::size_t n_;
  std::mt19937_64 engine_;
};

}  // namespace zck
