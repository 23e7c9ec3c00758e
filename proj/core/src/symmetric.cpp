#include "zck/symmetric.hpp"

#include <stdexcept>

namespace zck {

MPoly elem_sym(unsigned s, std::span<const std::size_t> vars, std::size_t nvars) {
  // e_k(x_1..x_m) via the recurrence e_k(.., x_m) = e_k(.., x_{m-1}) + x_m e_{k-1}(.., x_{m-1}).
  if (s > vars.size()) return MPoly(nvars);
  std::vector<MPoly> e(s + 1, MPoly(nvars));
  e[0] = MPoly::constant(nvars, 1);
  for (std::size_t m = 0; m < vars.size(); ++m) {
    MPoly x = MPoly::variable(nvars, vars[m]);
    for (std::size_t k = std::min<std::size_t>(s, m + 1); k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e[s];
}

namespace {

template <typename T>
bool invariant_impl(const T& x, std::span<const Transposition> swaps, const VariableSet& vars) {
  for (const auto& t : swaps) {
    if (t.first.color != t.second.color)
      throw std::invalid_argument("is_invariant: transposition mixes colors");
    std::size_t i = vars.index_of(t.first), j = vars.index_of(t.second);
    if (i == j) continue;
    if (!(x.swap_variables(i, j) == x)) return false;
  }
  return true;
}

}  // namespace

bool is_invariant(const MPoly& x, std::span<const Transposition> swaps, const VariableSet& vars) {
  return invariant_impl(x, swaps, vars);
}

bool is_invariant(const RatFunc& x, std::span<const Transposition> swaps, const VariableSet& vars) {
  return invariant_impl(x, swaps, vars);
}

std::vector<Transposition> same_color_transpositions(const std::vector<int>& dims) {
  std::vector<Transposition> out;
  for (std::size_t c = 0; c < dims.size(); ++c)
    for (int l = 1; l <= dims[c]; ++l)
      for (int j = l + 1; j <= dims[c]; ++j) out.push_back({{c, l}, {c, j}});
  return out;
}

}  // namespace zck
