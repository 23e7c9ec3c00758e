#pragma once

#include <string>
#include <vector>

#include "zck/local_space.hpp"
#include "zck/serialize.hpp"

namespace zck {

enum class CasFormat { Macaulay2, Singular };
/// Coefficient ring: polynomials Q[a] or the fraction field Q(a).
enum class CasBase { Polynomial, FractionField };

/// Ring and ideal source text: generators z_0..z_{2^n - 1} (z_k is the
/// subset with mask k) over the coordinates a_1..a_n, one quadric
///   lhs * z_A * z_B - rhs * z_{AuB} * z_{AnB}
/// per relation. `side` only labels the header comment.
std::string export_cas(const Ambient& amb, const std::vector<Relation>& relations, const std::string& side,
                       CasFormat format, CasBase base = CasBase::Polynomial);

}  // namespace zck
