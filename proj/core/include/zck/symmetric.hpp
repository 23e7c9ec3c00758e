#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zck/mpoly.hpp"
#include "zck/ratfunc.hpp"
#include "zck/variables.hpp"

namespace zck {

/// e_s of the listed variables (indices into a ring of nvars variables).
/// e_0 = 1; s > |vars| gives 0.
MPoly elem_sym(unsigned s, std::span<const std::size_t> vars, std::size_t nvars);

/// Swap of two slots of one color.
struct Transposition {
  Variable first;
  Variable second;
};

/// True iff x is fixed by every listed swap. Throws std::invalid_argument on a
/// cross-color swap.
bool is_invariant(const MPoly& x, std::span<const Transposition> swaps, const VariableSet& vars);
bool is_invariant(const RatFunc& x, std::span<const Transposition> swaps, const VariableSet& vars);

/// All transpositions (l j) within each color.
std::vector<Transposition> same_color_transpositions(const std::vector<int>& dims);

}  // namespace zck
