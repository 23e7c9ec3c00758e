#include "zck/variables.hpp"

#include <stdexcept>

namespace zck {

VariableSet VariableSet::coordinates(std::vector<std::string> color_names, std::vector<int> dims) {
  if (color_names.size() != dims.size())
    throw std::invalid_argument("VariableSet: color/dimension count mismatch");
  VariableSet vs;
  vs.color_names_ = std::move(color_names);
  vs.dims_ = std::move(dims);
  for (std::size_t c = 0; c < vs.dims_.size(); ++c) {
    if (vs.dims_[c] < 0) throw std::invalid_argument("VariableSet: negative dimension");
    vs.offsets_.push_back(vs.coords_.size());
    for (int s = 1; s <= vs.dims_[c]; ++s) {
      vs.coords_.push_back({c, s});
      vs.names_.push_back("a_" + vs.color_names_[c] + "_" + std::to_string(s));
    }
  }
  return vs;
}

std::size_t VariableSet::append_symbol(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

std::optional<Variable> VariableSet::coordinate(std::size_t index) const {
  if (index < coords_.size()) return coords_[index];
  if (index >= names_.size()) throw std::out_of_range("VariableSet: index out of range");
  return std::nullopt;
}

std::size_t VariableSet::index_of(Variable v) const {
  if (v.color >= dims_.size() || v.slot < 1 || v.slot > dims_[v.color])
    throw std::out_of_range("VariableSet: no such coordinate");
  return offsets_[v.color] + static_cast<std::size_t>(v.slot - 1);
}

std::optional<std::size_t> VariableSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

}  // namespace zck
