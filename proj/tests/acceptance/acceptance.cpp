// One line per acceptance criterion; exit status 0 iff all pass within their time limits.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "suite.hpp"
#include "zck/coulomb.hpp"
#include "zck/divisor_base.hpp"
#include "zck/identify.hpp"
#include "zck/linalg.hpp"
#include "zck/local_space.hpp"
#include "zck/serialize.hpp"
#include "zck/symmetric.hpp"

using namespace zck;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kRandomTriples = 100;
constexpr int kFiberPoints = 20;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<DimVector> suite_dims(const Quiver& q, int max_total) {
  return suite::dims_up_to(q.vertex_count(), q.vertex_count() == 1 ? 6 : max_total);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

unsigned worker_count() {
  if (const char* env = std::getenv("ZCK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class F>
void for_each_cochar(std::size_t n, int lo, int hi, F&& f) {
  Cocharacter c{std::vector<int>(n, lo)};
  while (true) {
    f(c);
    std::size_t i = 0;
    while (i < n && ++c.v[i] > hi) c.v[i++] = lo;
    if (i == n) return;
  }
}

// 1. The structure-constant identity on every unordered pair.
Outcome identity_suite() {
  Outcome o;
  std::uint64_t pairs = 0, cases = 0;
  VerifyOptions opts;
  opts.threads = worker_count();
  for (const auto& [name, q] : suite::suite_quivers())
    for (const auto& alpha : suite_dims(q, 4)) {
      const auto r = verify_all(q, alpha, opts);
      pairs += r.pairs_checked;
      ++cases;
      if (!r.passed()) {
        o.pass = false;
        o.detail += " " + name + "[" + format_dim_vector(alpha, q) + "]";
      }
    }
  o.detail = fmt("%llu cases, %llu pairs", (unsigned long long)cases, (unsigned long long)pairs) + o.detail;
  return o;
}

// 2. Multiset ledger for edge-free quivers versus the polynomial verdict.
Outcome supp_equivalence() {
  Outcome o;
  std::uint64_t pairs = 0;
  for (const Quiver& q : {parse_quiver("vertex v\n"), parse_quiver("vertex v\nvertex w\n")})
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 6)) {
      const IdentityChecker checker(q, alpha);
      const auto all = subsets_of(checker.index_set());
      for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = x; y < all.size(); ++y) {
          const auto v = supp_oracle(q, alpha, all[x], all[y]);
          ++pairs;
          if (!v.agrees || v.agrees != checker.check(all[x], all[y]).holds) o.pass = false;
        }
    }
  o.detail = fmt("%llu pairs", (unsigned long long)pairs);
  return o;
}

CoulombElement random_element(std::mt19937_64& rng, const CoulombAlgebra& alg) {
  const std::size_t n = alg.nvars();
  std::uniform_int_distribution<int> entry(-2, 2), terms(1, 3), pick(0, 3);
  CoulombElement x(alg.alpha());
  for (int t = terms(rng); t > 0; --t) {
    Cocharacter chi{std::vector<int>(n)};
    for (auto& v : chi.v) v = entry(rng);
    MPoly num = suite::random_poly(rng, n, 2, 3);
    if (num.is_zero()) num = MPoly::constant(n, 1);
    RatFunc coeff(num);
    if (n >= 2 && pick(rng) == 0) coeff = RatFunc(num, MPoly::difference(n, 0, n - 1));
    x.add_term(chi, coeff);
  }
  return x;
}

// 3. Commutativity and associativity on random triples; fc symmetry and
// multiplicativity over an edge split on all cocharacters in {-2..2}.
Outcome bfn_laws() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uint64_t triples = 0, fc_pairs = 0;
  for (const auto& [name, q] : suite::suite_quivers()) {
    const DimVector alpha{std::vector<int>(q.vertex_count(), q.vertex_count() == 1 ? 3 : 1)};
    const CoulombAlgebra alg(q, alpha);
    for (int t = 0; t < kRandomTriples; ++t, ++triples) {
      const auto x = random_element(rng, alg), y = random_element(rng, alg), z = random_element(rng, alg);
      if (!(alg.multiply(x, y) == alg.multiply(y, x)) ||
          !(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)))) {
        o.pass = false;
        o.detail += " mul:" + name;
        break;
      }
    }
  }
  for (const auto& [name, q] : suite::suite_quivers()) {
    // first edge against the rest (the empty split for edge-free quivers)
    std::vector<Edge> e1, e2;
    for (std::size_t k = 0; k < q.edges().size(); ++k) (k == 0 ? e1 : e2).push_back(q.edges()[k]);
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 4)) {
      const CoulombAlgebra whole(q, alpha), p1(q.with_edges(e1), alpha), p2(q.with_edges(e2), alpha);
      bool ok = true;
      for_each_cochar(whole.nvars(), -2, 2, [&](const Cocharacter& l) {
        for_each_cochar(whole.nvars(), -2, 2, [&](const Cocharacter& m) {
          ++fc_pairs;
          const auto fc = whole.fc_factors(l, m);
          if (!(fc == whole.fc_factors(m, l)) || !(fc == p1.fc_factors(l, m) * p2.fc_factors(l, m))) ok = false;
        });
      });
      if (!ok) {
        o.pass = false;
        o.detail += " fc:" + name + "[" + format_dim_vector(alpha, q) + "]";
      }
    }
  }
  o.detail = fmt("%llu triples, %llu fc pairs", (unsigned long long)triples, (unsigned long long)fc_pairs) + o.detail;
  return o;
}

// 4. Grassmannian relations vanish on the regular part; rank certified.
Outcome grassmannian() {
  Outcome o;
  int cases = 0;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k, ++cases) {
      const DimVector alpha{{n}}, beta{{k}};
      const auto pres = gr_presentation(alpha, beta);
      const ColoredIndexSet cis(alpha);
      for (auto s : subsets_of(cis, beta))
        for (const auto& r : pres.relations)
          if (!gr_restrict_regular(pres, r, s).is_zero()) o.pass = false;
      try {
        const auto basis = global_basis(pres, kSeed);
        if (Integer(basis.rank) != pres.rank ||
            matrix_rank(restriction_matrix(pres, basis.monomials, basis.point)) != basis.rank)
          o.pass = false;
      } catch (const CertificationFailed&) {
        o.pass = false;
        o.detail += fmt(" uncertified n=%d k=%d", n, k);
      }
    }
  o.detail = fmt("%d (n, k) cases", cases) + o.detail;
  return o;
}

// 5. Specialized locality relations at regular points are Segre.
Outcome regular_fibers() {
  Outcome o;
  int fibers = 0;
  for (const auto& [name, q] : suite::suite_quivers())
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 3)) {
      const ColoredIndexSet cis(alpha);
      const auto rels = locality_relations(q, cis);
      RegularPointSampler sampler(cis.total(), kSeed);
      for (int t = 0; t < kFiberPoints; ++t, ++fibers) {
        const auto fib = specialize_fiber(rels, sampler.next());
        if (!compare_with_segre(fib.relations, static_cast<unsigned>(cis.total())).accepted) {
          o.pass = false;
          o.detail += " " + name + "[" + format_dim_vector(alpha, q) + "]";
          break;
        }
      }
    }
  o.detail = fmt("%d fibers", fibers) + o.detail;
  return o;
}

// 6. The A1, alpha = 2 relation by hand: (a1 - a2)^2 s^1 s^2 + s^12 s^0.
Outcome anchor() {
  Outcome o;
  const Quiver q = parse_quiver("vertex v\n");
  const ColoredIndexSet cis(DimVector{{2}});
  const auto rels = locality_relations(q, cis);
  if (rels.size() != 1) return {false, fmt("%zu relations", rels.size())};
  const Relation& r = rels[0];
  const MPoly d2 = MPoly::difference(2, 0, 1).pow(2);
  // lhs = c (a1 - a2)^2 and rhs = -c for one nonzero rational c
  const bool shape = r.a.mask == 1 && r.b.mask == 2 && r.join.mask == 3 && r.meet.mask == 0;
  const bool unit = r.rhs.is_constant() && !r.rhs.is_zero() && r.lhs == Rational(-r.rhs.constant_value()) * d2;
  const auto fib = specialize_fiber(rels, {Rational(0), Rational(1)});
  const bool segre = compare_with_segre(fib.relations, 2).accepted;
  o.pass = shape && unit && segre;
  o.detail = "lhs " + format(r.lhs, {"a_1", "a_2"}) + ", rhs " + format(r.rhs, {"a_1", "a_2"}) +
             (segre ? ", Segre at (0,1)" : ", not Segre at (0,1)");
  return o;
}

// 7. l_Q / l = +-1, and W^beta-invariance of l on the full index set.
Outcome sign_ledger() {
  Outcome o;
  std::uint64_t subsets = 0;
  for (const auto& [name, q] : suite::suite_quivers()) {
    const auto kappa = kappa_of(q);
    for (const auto& alpha : suite_dims(q, 4)) {
      const ColoredIndexSet cis(alpha);
      for (auto s : subsets_of(cis)) {
        ++subsets;
        const auto ratio = local_factor_Q_factors(q, cis, s) / local_factor_factors(kappa, cis, s);
        if (!ratio.exponents().empty() || (ratio.constant() != 1 && ratio.constant() != -1)) o.pass = false;
      }
      const auto vars = VariableSet::coordinates(q.vertices(), alpha.n);
      if (!is_invariant(local_factor(kappa, cis, cis.full()), same_color_transpositions(alpha.n), vars)) {
        o.pass = false;
        o.detail += " W:" + name;
      }
    }
  }
  o.detail = fmt("%llu subsets", (unsigned long long)subsets) + o.detail;
  return o;
}

std::size_t brute_force_segre_count(unsigned n) {
  const std::uint64_t m = std::uint64_t{1} << n;
  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  std::set<std::pair<Pair, Pair>> found;
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      for (std::uint64_t u = 0; u < m; ++u)
        for (std::uint64_t v = 0; v < m; ++v) {
          bool same = true;
          for (unsigned k = 0; k < n && same; ++k)
            same = ((x >> k) & 1u) + ((y >> k) & 1u) == ((u >> k) & 1u) + ((v >> k) & 1u);
          const Pair p{std::min(x, y), std::max(x, y)}, q{std::min(u, v), std::max(u, v)};
          if (same && p != q) found.insert({std::min(p, q), std::max(p, q)});
        }
  return found.size();
}

// 8. Segre equations of (P^1)^n.
Outcome segre_generator() {
  Outcome o;
  const auto two = segre_equations(2);
  using Side = std::set<std::uint64_t>;
  o.pass = two.size() == 1 && Side{two[0].x, two[0].y} == Side{1, 2} && Side{two[0].u, two[0].v} == Side{3, 0};
  for (unsigned n = 0; n <= 4; ++n) {
    const std::size_t got = segre_equations(n).size(), want = brute_force_segre_count(n);
    o.detail += fmt("%s|D|=%u: %zu", n ? ", " : "", n, got);
    if (got != want) {
      o.pass = false;
      o.detail += fmt(" (brute force %zu)", want);
    }
  }
  return o;
}

// Every report the suite produces, as one JSON text.
std::string suite_json(unsigned threads) {
  std::ostringstream out;
  VerifyOptions opts;
  opts.threads = threads;
  for (const auto& [name, q] : suite::suite_quivers())
    for (const auto& alpha : suite_dims(q, 4)) out << report_to_json(verify_all(q, alpha, opts)).dump() << "\n";
  // a failing convention, so failure records are covered too
  opts.conventions.weights = WeightSign::TargetMinusSource;
  const Quiver a3 = parse_quiver("vertex 1\nvertex 2\nvertex 3\nedge 1 2\nedge 2 3\n");
  out << report_to_json(verify_all(a3, DimVector{{2, 1, 1}}, opts)).dump() << "\n";
  for (const auto& [name, q] : suite::suite_quivers())
    for (const auto& alpha : suite::dims_up_to(q.vertex_count(), 3)) {
      const Ambient amb(q, alpha);
      const auto rels = locality_relations(q, amb.index_set);
      const auto point = RegularPointSampler(amb.index_set.total(), kSeed).next();
      const auto fib = specialize_fiber(rels, point);
      out << fiber_to_json(amb, point, fib, compare_with_segre(fib.relations, amb.index_set.total())).dump()
          << "\n";
    }
  return out.str();
}

// 9. Byte-identical output across runs and worker counts.
Outcome determinism() {
  const std::string a = suite_json(1), b = suite_json(1), c = suite_json(4);
  Outcome o;
  o.pass = a == b && a == c;
  o.detail = fmt("%zu bytes, runs %s, 1 vs 4 workers %s", a.size(), a == b ? "equal" : "differ",
                 a == c ? "equal" : "differ");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "identity suite", 60, identity_suite},
      {2, "supp-oracle equivalence", 5, supp_equivalence},
      {3, "BFN algebra laws", 30, bfn_laws},
      {4, "Gr presentation", 10, grassmannian},
      {5, "regular fibers are Segre", 10, regular_fibers},
      {6, "hand-derived anchor", 5, anchor},
      {7, "sign ledger", 5, sign_ledger},
      {8, "Segre generator", 5, segre_generator},
      {9, "determinism", 120, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %d %s: %s (%s; %.2f s, limit %.0f s%s)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
