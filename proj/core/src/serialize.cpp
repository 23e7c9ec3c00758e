#include "zck/serialize.hpp"

#include <stdexcept>

namespace zck {

Ambient::Ambient(Quiver q, DimVector a)
    : quiver(std::move(q)), alpha(std::move(a)), index_set(alpha), variables(VariableSet::coordinates(quiver.vertices(), alpha.n)) {
  if (alpha.n.size() != quiver.vertex_count()) throw std::invalid_argument("Ambient: dimension vector size mismatch");
}

Json subset_to_json(ColoredSubset s, const Ambient& amb) {
  Json j = Json::object();
  for (std::size_t c = 0; c < amb.quiver.vertex_count(); ++c) j[amb.quiver.vertices()[c]] = amb.index_set.slots(s, c);
  return j;
}

ColoredSubset subset_from_json(const Json& j, const Ambient& amb) {
  if (!j.is_object()) throw std::invalid_argument("subset JSON must be an object");
  std::vector<std::vector<int>> slots(amb.quiver.vertex_count());
  for (const auto& [id, arr] : j.items()) slots.at(amb.quiver.index_of(id)) = arr.get<std::vector<int>>();
  return amb.index_set.from_slots(slots);
}

Json relation_to_json(const Relation& r, const Ambient& amb) {
  return Json{{"A", subset_to_json(r.a, amb)},
              {"B", subset_to_json(r.b, amb)},
              {"union", subset_to_json(r.join, amb)},
              {"intersection", subset_to_json(r.meet, amb)},
              {"lhs_coeff", format(r.lhs, amb.variables.names())},
              {"rhs_coeff", format(r.rhs, amb.variables.names())}};
}

Relation relation_from_json(const Json& j, const Ambient& amb) {
  return Relation{subset_from_json(j.at("A"), amb),
                  subset_from_json(j.at("B"), amb),
                  subset_from_json(j.at("union"), amb),
                  subset_from_json(j.at("intersection"), amb),
                  parse_mpoly(j.at("lhs_coeff").get<std::string>(), amb.variables.names()),
                  parse_mpoly(j.at("rhs_coeff").get<std::string>(), amb.variables.names())};
}

Json coulomb_to_json(const CoulombElement& x, const Ambient& amb) {
  Json arr = Json::array();
  for (const auto& [chi, coeff] : x.terms()) {
    Json grouped = Json::array();
    for (std::size_t c = 0; c < amb.index_set.colors(); ++c) {
      std::vector<int> part;
      for (int k = 1; k <= amb.alpha.n[c]; ++k) part.push_back(chi.v[amb.index_set.flat_index(c, k)]);
      grouped.push_back(part);
    }
    Json term{{"chi", grouped},
              {"coeff_num", format(coeff.numerator(), amb.variables.names())},
              {"coeff_den", format(coeff.denominator(), amb.variables.names())}};
    term["rees_degree"] = x.rees_degree() ? Json(*x.rees_degree()) : Json(nullptr);
    arr.push_back(std::move(term));
  }
  return arr;
}

CoulombElement coulomb_from_json(const Json& j, const Ambient& amb) {
  if (!j.is_array()) throw std::invalid_argument("CoulombElement JSON must be an array");
  std::optional<int> degree;
  if (!j.empty() && !j.front().at("rees_degree").is_null()) degree = j.front().at("rees_degree").get<int>();
  CoulombElement x(amb.alpha, degree);
  for (const auto& term : j) {
    Cocharacter chi{std::vector<int>(amb.index_set.total(), 0)};
    const auto& grouped = term.at("chi");
    if (grouped.size() != amb.index_set.colors()) throw std::invalid_argument("chi: wrong number of vertex groups");
    for (std::size_t c = 0; c < grouped.size(); ++c) {
      auto part = grouped[c].get<std::vector<int>>();
      if (static_cast<int>(part.size()) != amb.alpha.n[c]) throw std::invalid_argument("chi: wrong group length");
      for (int k = 1; k <= amb.alpha.n[c]; ++k) chi.v[amb.index_set.flat_index(c, k)] = part[k - 1];
    }
    RatFunc coeff(parse_mpoly(term.at("coeff_num").get<std::string>(), amb.variables.names()),
                  parse_mpoly(term.at("coeff_den").get<std::string>(), amb.variables.names()));
    x.add_term(chi, coeff);
  }
  return x;
}

Json quiver_to_json(const Quiver& q) {
  Json edges = Json::array();
  for (const auto& e : q.edges()) edges.push_back({q.vertices()[e.source], q.vertices()[e.target]});
  return Json{{"vertices", q.vertices()}, {"edges", edges}};
}

Json alpha_to_json(const DimVector& alpha, const Quiver& q) {
  Json j = Json::object();
  for (std::size_t c = 0; c < q.vertex_count(); ++c) j[q.vertices()[c]] = alpha.n.at(c);
  return j;
}

namespace {

const char* sign_name(WeightSign s) {
  return s == WeightSign::SourceMinusTarget ? "source-minus-target" : "target-minus-source";
}

}  // namespace

Json report_to_json(const IdentityReport& r) {
  Ambient amb(r.quiver, r.alpha);
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"A", subset_to_json(f.a, amb)},
                        {"B", subset_to_json(f.b, amb)},
                        {"lhs", format(f.lhs, amb.variables.names())},
                        {"rhs", format(f.rhs, amb.variables.names())}});
  Json j{{"quiver", quiver_to_json(r.quiver)},
         {"alpha", alpha_to_json(r.alpha, r.quiver)},
         {"conventions", {{"weights", sign_name(r.conventions.weights)}, {"local", sign_name(r.conventions.local)}}},
         {"pairs_checked", r.pairs_checked},
         {"verdict", r.passed() ? "pass" : "fail"},
         {"failures", failures}};
  if (r.sign_repair) j["sign_repair"] = *r.sign_repair;
  return j;
}

std::string generator_name(const std::string& prefix, ColoredSubset s) {
  return prefix + "_" + std::to_string(s.mask);
}

namespace {

Json generators_json(const Ambient& amb, const std::string& prefix) {
  Json gens = Json::array();
  for (auto s : subsets_of(amb.index_set))
    gens.push_back({{"name", generator_name(prefix, s)}, {"subset", subset_to_json(s, amb)}});
  return gens;
}

Json relations_json(const Ambient& amb, const std::vector<Relation>& relations) {
  Json rels = Json::array();
  for (const auto& r : relations) rels.push_back(relation_to_json(r, amb));
  return rels;
}

}  // namespace

Json local_presentation_json(const Ambient& amb, const std::vector<Relation>& relations) {
  return Json{{"side", "local"},
              {"quiver", quiver_to_json(amb.quiver)},
              {"alpha", alpha_to_json(amb.alpha, amb.quiver)},
              {"variables", amb.variables.names()},
              {"generators", generators_json(amb, "s")},
              {"relations", relations_json(amb, relations)}};
}

Json coulomb_presentation_json(const Ambient& amb, const CoulombAlgebra& algebra,
                               const std::vector<Relation>& relations) {
  const auto all = subsets_of(amb.index_set);
  Json table = Json::array();
  for (auto a : all)
    for (auto b : all) {
      auto chi_a = cocharacter_of(amb.index_set, a), chi_b = cocharacter_of(amb.index_set, b);
      table.push_back({{"left", generator_name("x", a)},
                       {"right", generator_name("x", b)},
                       {"fc", format(algebra.fc_coefficient(chi_a, chi_b), amb.variables.names())}});
    }
  return Json{{"side", "coulomb"},
              {"quiver", quiver_to_json(amb.quiver)},
              {"alpha", alpha_to_json(amb.alpha, amb.quiver)},
              {"variables", amb.variables.names()},
              {"generators", generators_json(amb, "x")},
              {"multiplication_table", table},
              {"relations", relations_json(amb, relations)}};
}

Json fiber_to_json(const Ambient& amb, const std::vector<Rational>& point, const FiberSpecialization& fiber,
                   const SegreVerdict& verdict) {
  Json pt = Json::object();
  for (std::size_t v = 0; v < point.size(); ++v) pt[amb.variables.name(v)] = to_string(point[v]);
  Json rels = Json::array();
  for (const auto& r : fiber.relations)
    rels.push_back({{"A", generator_name("s", r.a)},
                    {"B", generator_name("s", r.b)},
                    {"union", generator_name("s", r.join)},
                    {"intersection", generator_name("s", r.meet)},
                    {"lhs_coeff", to_string(r.lhs)},
                    {"rhs_coeff", to_string(r.rhs)},
                    {"degenerate", r.degenerate()}});
  Json scaling = Json::array();
  for (const auto& u : verdict.scaling) scaling.push_back(to_string(u));
  return Json{{"quiver", quiver_to_json(amb.quiver)},
              {"alpha", alpha_to_json(amb.alpha, amb.quiver)},
              {"point", pt},
              {"relations", rels},
              {"degenerate_count", fiber.degenerate.size()},
              {"segre", {{"accepted", verdict.accepted}, {"reason", verdict.reason}, {"scaling", scaling}}}};
}

}  // namespace zck
