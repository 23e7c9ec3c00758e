#pragma once

#include <cstddef>
#include <vector>

#include "zck/rational.hpp"

namespace zck {

/// Incremental exact row reduction over Q.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  /// Adds a row; returns true iff it was independent of the rows kept so far.
  bool add(std::vector<Rational> row);
  /// True iff the row lies in the span of the kept rows.
  bool contains(std::vector<Rational> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;  // each row normalized with pivot 1
  std::vector<std::size_t> pivots_;

  void reduce(std::vector<Rational>& row) const;
};

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace zck
