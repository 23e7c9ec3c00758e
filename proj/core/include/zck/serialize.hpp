#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zck/colored_subset.hpp"
#include "zck/coulomb.hpp"
#include "zck/identify.hpp"
#include "zck/local_space.hpp"
#include "zck/quiver.hpp"
#include "zck/variables.hpp"

namespace zck {

using Json = nlohmann::ordered_json;

/// Everything needed to name coordinates and subsets of one (Q, alpha).
struct Ambient {
  Quiver quiver;
  DimVector alpha;
  ColoredIndexSet index_set;
  VariableSet variables;

  Ambient(Quiver q, DimVector a);
};

/// {"<vertex id>": [sorted slots], ...} over every vertex.
Json subset_to_json(ColoredSubset s, const Ambient& amb);
ColoredSubset subset_from_json(const Json& j, const Ambient& amb);

/// {"A", "B", "union", "intersection", "lhs_coeff", "rhs_coeff"}.
Json relation_to_json(const Relation& r, const Ambient& amb);
Relation relation_from_json(const Json& j, const Ambient& amb);

/// [{"chi": [[...] per vertex], "coeff_num", "coeff_den", "rees_degree"}, ...]
Json coulomb_to_json(const CoulombElement& x, const Ambient& amb);
CoulombElement coulomb_from_json(const Json& j, const Ambient& amb);

Json quiver_to_json(const Quiver& q);
Json alpha_to_json(const DimVector& alpha, const Quiver& q);

/// Deterministic report: wall time is deliberately left out.
Json report_to_json(const IdentityReport& r);

/// Generator name s_<mask> / x_<mask> for the subset with that mask.
std::string generator_name(const std::string& prefix, ColoredSubset s);

/// Local side: generators s^S and cleared locality relations.
Json local_presentation_json(const Ambient& amb, const std::vector<Relation>& relations);
/// Coulomb side: generators x^{chi(S)} t, the fc table on the 0/1 cocharacters, and relations.
Json coulomb_presentation_json(const Ambient& amb, const CoulombAlgebra& algebra,
                               const std::vector<Relation>& relations);

Json fiber_to_json(const Ambient& amb, const std::vector<Rational>& point, const FiberSpecialization& fiber,
                   const SegreVerdict& verdict);

}  // namespace zck
