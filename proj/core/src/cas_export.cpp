#include "zck/cas_export.hpp"

#include <sstream>

namespace zck {

namespace {

std::string quadric(const Relation& r, const std::vector<std::string>& names, CasFormat fmt) {
  auto z = [&](ColoredSubset s) {
    return fmt == CasFormat::Macaulay2 ? "z_" + std::to_string(s.mask) : "z(" + std::to_string(s.mask) + ")";
  };
  return "(" + format(r.lhs, names) + ")*" + z(r.a) + "*" + z(r.b) + " - (" + format(r.rhs, names) + ")*" +
         z(r.join) + "*" + z(r.meet);
}

}  // namespace

std::string export_cas(const Ambient& amb, const std::vector<Relation>& relations, const std::string& side,
                       CasFormat format, CasBase base) {
  const std::size_t n = amb.index_set.total();
  const std::size_t gens = std::size_t{1} << n;
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k)
    names.push_back(format == CasFormat::Macaulay2 ? "a_" + std::to_string(k) : "a(" + std::to_string(k) + ")");

  const char* comment = format == CasFormat::Macaulay2 ? "-- " : "// ";
  std::ostringstream out;
  out << comment << side << " side, quiver with vertices";
  for (const auto& v : amb.quiver.vertices()) out << " " << v;
  out << ", alpha " << format_dim_vector(amb.alpha, amb.quiver) << "\n";
  for (std::size_t k = 0; k < n; ++k)
    out << comment << names[k] << " = " << amb.variables.name(k) << "\n";
  for (std::size_t m = 0; m < gens; ++m) {
    out << comment << (format == CasFormat::Macaulay2 ? "z_" + std::to_string(m) : "z(" + std::to_string(m) + ")")
        << " <-> {";
    bool first = true;
    for (std::size_t k = 0; k < n; ++k)
      if ((m >> k) & 1u) {
        out << (first ? "" : ", ") << amb.quiver.vertices()[amb.index_set.color_of(k)] << ":"
            << amb.index_set.slot_of(k);
        first = false;
      }
    out << "}\n";
  }

  if (format == CasFormat::Macaulay2) {
    std::string coords = n == 0 ? "QQ" : "QQ[a_1..a_" + std::to_string(n) + "]";
    if (n > 0 && base == CasBase::FractionField) coords = "frac(" + coords + ")";
    out << "A = " << coords << ";\n";
    out << "R = A[z_0..z_" << gens - 1 << "];\n";
    if (relations.empty()) {
      out << "I = ideal(0_R);\n";
    } else {
      out << "I = ideal(\n";
      for (std::size_t k = 0; k < relations.size(); ++k)
        out << "  " << quadric(relations[k], names, format) << (k + 1 < relations.size() ? ",\n" : "\n");
      out << ");\n";
    }
  } else {
    std::string zs = "z(0.." + std::to_string(gens - 1) + ")";
    std::string as = "a(1.." + std::to_string(n) + ")";
    if (n == 0) out << "ring r = 0,(" << zs << "),dp;\n";
    else if (base == CasBase::FractionField) out << "ring r = (0," << as << "),(" << zs << "),dp;\n";
    else out << "ring r = 0,(" << as << "," << zs << "),dp;\n";
    if (relations.empty()) {
      out << "ideal I = 0;\n";
    } else {
      out << "ideal I =\n";
      for (std::size_t k = 0; k < relations.size(); ++k)
        out << "  " << quadric(relations[k], names, format) << (k + 1 < relations.size() ? ",\n" : ";\n");
    }
  }
  return out.str();
}

}  // namespace zck
