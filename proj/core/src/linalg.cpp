#include "zck/linalg.hpp"

#include <stdexcept>

namespace zck {

void RowEchelon::reduce(std::vector<Rational>& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = row[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t c = pivots_[r]; c < width_; ++c)
      if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
  }
}

bool RowEchelon::add(std::vector<Rational> row) {
  if (row.size() != width_) throw std::invalid_argument("RowEchelon: row width mismatch");
  reduce(row);
  std::size_t p = 0;
  while (p < width_ && row[p] == 0) ++p;
  if (p == width_) return false;
  const Rational inv = 1 / row[p];
  for (std::size_t c = p; c < width_; ++c) row[c] *= inv;
  // Keep earlier rows reduced at the new pivot so reduce() stays single-pass.
  for (auto& other : rows_) {
    const Rational f = other[p];
    if (f == 0) continue;
    for (std::size_t c = p; c < width_; ++c)
      if (row[c] != 0) other[c] -= f * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowEchelon::contains(std::vector<Rational> row) const {
  if (row.size() != width_) throw std::invalid_argument("RowEchelon: row width mismatch");
  reduce(row);
  for (const auto& x : row)
    if (x != 0) return false;
  return true;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  RowEchelon e(rows.front().size());
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace zck
