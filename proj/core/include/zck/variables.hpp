#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zck {

/// Coordinate a^color_slot of C^alpha. Colors are vertex positions, slots are 1-based.
struct Variable {
  std::size_t color = 0;
  int slot = 1;

  auto operator<=>(const Variable&) const = default;
};

/// Ordered list of polynomial variables. Coordinate variables come first, in
/// lexicographic (color, slot) order; further named symbols (generators of a
/// presentation) may follow. The position of a variable is its index in every
/// exponent vector of an MPoly over this set.
class VariableSet {
 public:
  VariableSet() = default;

  /// Coordinates a_<color>_<slot> for dims[c] slots of each color.
  static VariableSet coordinates(std::vector<std::string> color_names, std::vector<int> dims);

  /// Copy with an extra symbol appended; returns its index via `index`.
  std::size_t append_symbol(std::string name);

  std::size_t size() const { return names_.size(); }
  std::size_t coordinate_count() const { return coords_.size(); }

  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& color_names() const { return color_names_; }

  /// The coordinate behind `index`, or nullopt for a plain symbol.
  std::optional<Variable> coordinate(std::size_t index) const;

  /// Throws std::out_of_range when (color, slot) is not a declared coordinate.
  std::size_t index_of(Variable v) const;
  std::optional<std::size_t> find(const std::string& name) const;

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> color_names_;
  std::vector<std::size_t> offsets_;  // first index of each color
  std::vector<int> dims_;
  std::vector<Variable> coords_;
  std::vector<std::string> names_;
};

}  // namespace zck
