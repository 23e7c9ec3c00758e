#include "zck/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "zck/cas_export.hpp"
#include "zck/identify.hpp"
#include "zck/local_space.hpp"
#include "zck/quiver.hpp"
#include "zck/serialize.hpp"

namespace zck::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

SymMatrix parse_kappa(const std::string& text) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<int> r;
    for (const auto& e : split(row, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (e.empty() || used != e.size()) throw ParseError(0, "bad kappa entry '" + e + "'");
      r.push_back(v);
    }
    rows.push_back(r);
  }
  try {
    return SymMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("kappa: ") + e.what());
  }
}

/// Either a quiver, or a symmetric matrix that may or may not be of quiver type.
struct Input {
  Quiver quiver;  // for a non-quiver-type kappa: its vertices, no edges
  std::optional<SymMatrix> kappa;
  bool quiver_type = true;
};

Input load_input(const RunConfig& c) {
  Input in;
  if (c.quiver_path && c.kappa) throw UsageError("--quiver and --kappa are mutually exclusive");
  if (c.quiver_path) {
    std::ifstream f(*c.quiver_path);
    if (!f) throw ParseError(0, "cannot read " + *c.quiver_path);
    std::stringstream buf;
    buf << f.rdbuf();
    in.quiver = parse_quiver(buf.str());
    return in;
  }
  if (!c.kappa) throw UsageError("one of --quiver or --kappa is required");
  in.kappa = parse_kappa(*c.kappa);
  if (in.kappa->size() == 0) throw ParseError(0, "empty kappa");
  in.quiver_type = in.kappa->is_quiver_type();
  if (in.quiver_type) {
    in.quiver = quiver_of_kappa(*in.kappa);
  } else {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= in.kappa->size(); ++i) names.push_back(std::to_string(i));
    in.quiver = Quiver(names);
  }
  return in;
}

void require_quiver_type(const Input& in, const std::string& what) {
  if (!in.quiver_type) throw NotQuiverType("kappa is not of quiver type; " + what + " needs a quiver");
}

std::vector<Rational> parse_point(const std::string& text, const Ambient& amb) {
  const std::size_t n = amb.index_set.total();
  std::vector<std::optional<Rational>> values(n);
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':'), eq = item.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw ParseError(0, "bad point assignment '" + item + "', expected id:slot=value");
    std::size_t color = 0;
    try {
      color = amb.quiver.index_of(trim(item.substr(0, colon)));
    } catch (const std::out_of_range&) {
      throw ParseError(0, "unknown vertex in '" + item + "'");
    }
    int slot = 0;
    std::size_t used = 0;
    const std::string slot_text = trim(item.substr(colon + 1, eq - colon - 1));
    try {
      slot = std::stoi(slot_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (slot_text.empty() || used != slot_text.size() || slot < 1 || slot > amb.alpha.n[color])
      throw ParseError(0, "bad slot in '" + item + "'");
    const std::size_t idx = amb.index_set.flat_index(color, slot);
    if (values[idx]) throw ParseError(0, "coordinate assigned twice in '" + item + "'");
    try {
      values[idx] = parse_rational(trim(item.substr(eq + 1)));
    } catch (const std::exception&) {
      throw ParseError(0, "bad value in '" + item + "'");
    }
  }
  std::vector<Rational> point;
  for (std::size_t k = 0; k < n; ++k) {
    if (!values[k]) throw ParseError(0, "point leaves " + amb.variables.name(k) + " unassigned");
    point.push_back(*values[k]);
  }
  return point;
}

std::string subset_text(ColoredSubset s, const Ambient& amb) {
  std::string t = "{";
  bool first = true;
  for (std::size_t k : amb.index_set.indices(s)) {
    t += (first ? "" : ",") + amb.quiver.vertices()[amb.index_set.color_of(k)] + ":" +
         std::to_string(amb.index_set.slot_of(k));
    first = false;
  }
  return t + "}";
}

std::string sign_name(WeightSign s) {
  return s == WeightSign::SourceMinusTarget ? "source-minus-target" : "target-minus-source";
}

std::string edges_text(const Quiver& q) {
  if (q.edges().empty()) return "(none)";
  std::string t;
  for (const auto& e : q.edges())
    t += (t.empty() ? "" : " ") + q.vertices()[e.source] + "->" + q.vertices()[e.target];
  return t;
}

std::vector<Relation> side_relations(const Input& in, const Ambient& amb, const std::string& side) {
  if (side == "coulomb") {
    require_quiver_type(in, "the coulomb side");
    return coulomb_relations(amb.quiver, amb.alpha);
  }
  if (in.kappa && !in.quiver_type) return locality_relations(*in.kappa, amb.index_set);
  return locality_relations(amb.quiver, amb.index_set);
}

int do_verify(const RunConfig& c, const Input& in, const Ambient& amb, const std::string& fmt, std::ostream& out,
              std::ostream& err) {
  require_quiver_type(in, "verify");
  VerifyOptions opts;
  opts.threads = c.threads;
  const auto report = verify_all(amb.quiver, amb.alpha, opts);
  err << "checked " << report.pairs_checked << " pairs in " << report.wall_seconds << " s\n";
  if (fmt == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << "vertices:";
    for (const auto& v : amb.quiver.vertices()) out << " " << v;
    out << "\nedges: " << edges_text(amb.quiver) << "\n";
    out << "alpha: " << format_dim_vector(amb.alpha, amb.quiver) << "\n";
    out << "conventions: weights " << sign_name(report.conventions.weights) << ", local "
        << sign_name(report.conventions.local) << "\n";
    out << "pairs checked: " << report.pairs_checked << "\n";
    for (const auto& f : report.failures)
      out << "failure " << subset_text(f.a, amb) << " " << subset_text(f.b, amb) << ": "
          << format(f.lhs, amb.variables.names()) << " != " << format(f.rhs, amb.variables.names()) << "\n";
    if (report.sign_repair) out << "sign repair: " << *report.sign_repair << "\n";
    out << "verdict: " << (report.passed() ? "pass" : "fail") << "\n";
  }
  return report.passed() ? kOk : kIdentityFailure;
}

int do_present(const RunConfig& c, const Input& in, const Ambient& amb, const std::string& fmt, std::ostream& out) {
  const auto relations = side_relations(in, amb, c.side);
  if (fmt == "json") {
    if (c.side == "coulomb")
      out << coulomb_presentation_json(amb, CoulombAlgebra(amb.quiver, amb.alpha), relations).dump(2) << "\n";
    else
      out << local_presentation_json(amb, relations).dump(2) << "\n";
    return kOk;
  }
  const std::string prefix = c.side == "coulomb" ? "x" : "s";
  const auto subsets = subsets_of(amb.index_set);
  out << c.side << " side, alpha " << format_dim_vector(amb.alpha, amb.quiver) << "\n";
  out << "generators: " << subsets.size() << "\n";
  for (auto s : subsets) out << "  " << generator_name(prefix, s) << " " << subset_text(s, amb) << "\n";
  out << "relations: " << relations.size() << "\n";
  const auto& names = amb.variables.names();
  for (const auto& r : relations)
    out << "  (" << format(r.lhs, names) << ")*" << generator_name(prefix, r.a) << "*" << generator_name(prefix, r.b)
        << " = (" << format(r.rhs, names) << ")*" << generator_name(prefix, r.join) << "*"
        << generator_name(prefix, r.meet) << "\n";
  return kOk;
}

int do_fiber(const RunConfig& c, const Input& in, const Ambient& amb, const std::string& fmt, std::ostream& out) {
  const auto relations = side_relations(in, amb, c.side);
  const auto point =
      c.point ? parse_point(*c.point, amb) : RegularPointSampler(amb.index_set.total(), c.seed).next();
  const auto fiber = specialize_fiber(relations, point);
  const auto verdict = compare_with_segre(fiber.relations, static_cast<unsigned>(amb.index_set.total()));
  if (fmt == "json") {
    out << fiber_to_json(amb, point, fiber, verdict).dump(2) << "\n";
    return kOk;
  }
  out << "point:";
  for (std::size_t k = 0; k < point.size(); ++k) out << " " << amb.variables.name(k) << "=" << to_string(point[k]);
  out << "\nrelations: " << fiber.relations.size() << " (" << fiber.degenerate.size() << " degenerate)\n";
  for (const auto& r : fiber.relations)
    out << "  " << to_string(r.lhs) << "*" << generator_name("s", r.a) << "*" << generator_name("s", r.b) << " = "
        << to_string(r.rhs) << "*" << generator_name("s", r.join) << "*" << generator_name("s", r.meet) << "\n";
  out << "segre: " << (verdict.accepted ? "true" : "false");
  if (!verdict.reason.empty()) out << " (" << verdict.reason << ")";
  out << "\n";
  return kOk;
}

int do_export(const RunConfig& c, const Input& in, const Ambient& amb, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") return do_present(c, in, amb, fmt, out);
  if (fmt != "m2" && fmt != "singular") throw UsageError("export does not support format '" + fmt + "'");
  if (c.base != "poly" && c.base != "field") throw UsageError("unknown base '" + c.base + "'");
  const auto relations = side_relations(in, amb, c.side);
  out << export_cas(amb, relations, c.side, fmt == "m2" ? CasFormat::Macaulay2 : CasFormat::Singular,
                    c.base == "field" ? CasBase::FractionField : CasBase::Polynomial);
  return kOk;
}

}  // namespace

unsigned threads_from_env() {
  if (const char* env = std::getenv("ZCK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.side != "local" && c.side != "coulomb") throw UsageError("--side must be local or coulomb");
    const Input in = load_input(c);
    const Ambient amb(in.quiver, parse_dim_vector(c.dim, in.quiver));
    const std::string fmt = c.format.value_or(c.command == Command::Export ? "m2" : "json");
    if (c.command != Command::Export && fmt != "json" && fmt != "text")
      throw UsageError("format '" + fmt + "' is only available for export");
    switch (c.command) {
      case Command::Verify: return do_verify(c, in, amb, fmt, out, err);
      case Command::Present: return do_present(c, in, amb, fmt, out);
      case Command::Fiber: return do_fiber(c, in, amb, fmt, out);
      case Command::Export: return do_export(c, in, amb, fmt, out);
    }
  } catch (const ParseError& e) {
    err << "error";
    if (e.line) err << " (line " << e.line << ")";
    err << ": " << e.what() << "\n";
    return kParseError;
  } catch (const NotQuiverType& e) {
    err << "error: " << e.what() << "\n";
    return kNotQuiverType;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace zck::cli
