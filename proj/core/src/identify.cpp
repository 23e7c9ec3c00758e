#include "zck/identify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "zck/linalg.hpp"

namespace zck {

IdentityChecker::IdentityChecker(const Quiver& q, const DimVector& alpha, SignConventions conventions)
    : algebra_(q, alpha, conventions.weights) {
  const auto& cis = algebra_.index_set();
  for (auto s : subsets_of(cis)) {
    euler_.push_back(euler_factors(cis, s));
    local_.push_back(local_factor_Q_factors(q, cis, s, conventions.local));
  }
}

LinearProduct IdentityChecker::coulomb_ratio(ColoredSubset a, ColoredSubset b) const {
  const auto& cis = algebra_.index_set();
  const ColoredSubset u = a | b, m = a & b;
  LinearProduct fc = algebra_.fc_factors(cocharacter_of(cis, a), cocharacter_of(cis, b)) /
                     algebra_.fc_factors(cocharacter_of(cis, u), cocharacter_of(cis, m));
  return fc * euler_[u.mask] * euler_[m.mask] / (euler_[a.mask] * euler_[b.mask]);
}

LinearProduct IdentityChecker::local_ratio(ColoredSubset a, ColoredSubset b) const {
  const ColoredSubset u = a | b, m = a & b;
  return local_[a.mask] * local_[b.mask] / (local_[u.mask] * local_[m.mask]);
}

IdentityCheck IdentityChecker::check(ColoredSubset a, ColoredSubset b) const {
  IdentityCheck r;
  r.lhs = coulomb_ratio(a, b).to_ratfunc();
  r.rhs = local_ratio(a, b).to_ratfunc();
  r.holds = r.lhs == r.rhs;
  return r;
}

IdentityCheck check_identity(const Quiver& q, const DimVector& alpha, ColoredSubset a, ColoredSubset b,
                             SignConventions conventions) {
  return IdentityChecker(q, alpha, conventions).check(a, b);
}

namespace {

std::vector<IdentityFailure> run_pairs(const IdentityChecker& checker, std::uint64_t subset_count, unsigned threads,
                                       std::uint64_t& pairs) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> work;
  for (std::uint64_t x = 0; x < subset_count; ++x)
    for (std::uint64_t y = x; y < subset_count; ++y) work.emplace_back(x, y);
  pairs = work.size();

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
  std::vector<std::vector<IdentityFailure>> per_worker(threads);
  auto worker = [&](unsigned id) {
    for (std::size_t k = id; k < work.size(); k += threads) {
      ColoredSubset a{work[k].first}, b{work[k].second};
      auto r = checker.check(a, b);
      if (!r.holds) per_worker[id].push_back({a, b, std::move(r.lhs), std::move(r.rhs)});
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  std::vector<IdentityFailure> failures;
  for (auto& v : per_worker)
    for (auto& f : v) failures.push_back(std::move(f));
  std::sort(failures.begin(), failures.end(), [](const IdentityFailure& l, const IdentityFailure& r) {
    return std::pair(l.a, l.b) < std::pair(r.a, r.b);
  });
  return failures;
}

}  // namespace

IdentityReport verify_all(const Quiver& q, const DimVector& alpha, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  IdentityReport report;
  report.quiver = q;
  report.alpha = alpha;
  report.conventions = options.conventions;
  IdentityChecker checker(q, alpha, options.conventions);
  const std::uint64_t subsets = std::uint64_t{1} << checker.index_set().total();
  report.failures = run_pairs(checker, subsets, threads, report.pairs_checked);

  if (!report.failures.empty() && options.diagnose_sign) {
    report.sign_repair = "none";
    const SignConventions flips[] = {
        {options.conventions.weights == WeightSign::SourceMinusTarget ? WeightSign::TargetMinusSource
                                                                      : WeightSign::SourceMinusTarget,
         options.conventions.local},
        {options.conventions.weights,
         options.conventions.local == WeightSign::SourceMinusTarget ? WeightSign::TargetMinusSource
                                                                    : WeightSign::SourceMinusTarget}};
    const char* names[] = {"flip-weights", "flip-local"};
    std::string repairs;
    for (int k = 0; k < 2; ++k) {
      std::uint64_t ignored = 0;
      if (run_pairs(IdentityChecker(q, alpha, flips[k]), subsets, threads, ignored).empty())
        repairs += (repairs.empty() ? "" : ",") + std::string(names[k]);
    }
    if (!repairs.empty()) report.sign_repair = repairs;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Relation> coulomb_relations(const Quiver& q, const DimVector& alpha, SignConventions conventions) {
  IdentityChecker checker(q, alpha, conventions);
  const auto all = subsets_of(checker.index_set());
  std::vector<Relation> out;
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      ColoredSubset a = all[x], b = all[y];
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      out.push_back(relation_from_ratio(a, b, checker.coulomb_ratio(a, b)));
    }
  return out;
}

namespace {

void add_product(SuppMultiset& m, const ColoredIndexSet& cis, ColoredSubset left, ColoredSubset right, int sign) {
  for (std::size_t l = 0; l < cis.total(); ++l) {
    if (!left.contains(l)) continue;
    for (std::size_t j = 0; j < cis.total(); ++j) {
      if (l == j || !right.contains(j) || cis.color_of(l) != cis.color_of(j)) continue;
      auto key = std::make_tuple(cis.color_of(l), cis.slot_of(l), cis.slot_of(j));
      if ((m[key] += sign) == 0) m.erase(key);
    }
  }
}

}  // namespace

SuppVerdict supp_oracle(const Quiver& q, const DimVector& alpha, ColoredSubset a, ColoredSubset b) {
  if (!q.edges().empty()) throw SuppOracleUnavailable("supp_oracle: quiver has edges");
  if (q.vertex_count() != alpha.n.size()) throw std::invalid_argument("supp_oracle: dimension vector size mismatch");
  const ColoredIndexSet cis(alpha);
  const ColoredSubset u = a | b, m = a & b;
  auto co = [&](ColoredSubset s) { return cis.complement(s); };

  SuppVerdict v;
  // Eu(S) is supported on S x (W \ S).
  add_product(v.euler_ledger, cis, a, co(a), +1);
  add_product(v.euler_ledger, cis, b, co(b), +1);
  add_product(v.euler_ledger, cis, u, co(u), -1);
  add_product(v.euler_ledger, cis, m, co(m), -1);
  // l(S) for the bare quiver is supported on S x S off the diagonal.
  add_product(v.local_ledger, cis, u, u, +1);
  add_product(v.local_ledger, cis, m, m, +1);
  add_product(v.local_ledger, cis, a, a, -1);
  add_product(v.local_ledger, cis, b, b, -1);

  const ColoredSubset c{a.mask & ~b.mask}, e{b.mask & ~a.mask};
  add_product(v.expected, cis, c, e, +1);
  add_product(v.expected, cis, e, c, +1);
  v.agrees = v.euler_ledger == v.expected && v.local_ledger == v.expected;
  return v;
}

FiberSpecialization specialize_fiber(const std::vector<Relation>& relations, const std::vector<Rational>& point) {
  FiberSpecialization out;
  for (const auto& r : relations) {
    NumericRelation n{r.a, r.b, r.join, r.meet, r.lhs.evaluate(point), r.rhs.evaluate(point)};
    if (n.degenerate()) out.degenerate.push_back(out.relations.size());
    out.relations.push_back(std::move(n));
  }
  return out;
}

namespace {

// Column of z_X z_Y (X <= Y) among the C(2^n + 1, 2) quadratic monomials.
std::size_t quad_column(std::uint64_t x, std::uint64_t y, std::uint64_t subsets) {
  if (x > y) std::swap(x, y);
  // Row-major upper triangle: columns before row x, then offset within the row.
  return static_cast<std::size_t>(x * subsets - x * (x - 1) / 2 + (y - x));
}

}  // namespace

SegreVerdict compare_with_segre(const std::vector<NumericRelation>& relations, unsigned n) {
  SegreVerdict verdict;
  if (n > kMaxSegreSet) throw EnumerationBoundExceeded("compare_with_segre: n exceeds 12");
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (const auto& r : relations)
    for (auto s : {r.a, r.b, r.join, r.meet})
      if (s.mask >= subsets) throw std::invalid_argument("compare_with_segre: generator outside the n-set");

  std::vector<std::optional<Rational>> u(subsets);
  u[0] = Rational(1);
  for (unsigned p = 0; p < n; ++p) u[std::uint64_t{1} << p] = Rational(1);

  // Pin u_S from relations lhs u_A u_B = rhs u_U u_V with exactly one unknown.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& r : relations) {
      if (r.lhs == 0 || r.rhs == 0) continue;
      std::uint64_t terms[4] = {r.a.mask, r.b.mask, r.join.mask, r.meet.mask};
      int unknown = -1, unknown_count = 0;
      for (int k = 0; k < 4; ++k) {
        if (u[terms[k]]) continue;
        bool repeat = unknown >= 0 && terms[unknown] == terms[k];
        if (!repeat) {
          unknown = k;
          ++unknown_count;
        } else {
          unknown_count = 2;  // squared unknown: not solvable linearly
        }
      }
      if (unknown_count != 1) continue;
      // Solve for the unknown factor; the other three are known.
      Rational left = r.lhs, right = r.rhs;
      for (int k = 0; k < 4; ++k) {
        if (k == unknown) continue;
        (k < 2 ? left : right) *= *u[terms[k]];
      }
      Rational value = unknown < 2 ? Rational(right / left) : Rational(left / right);
      if (value == 0) continue;
      u[terms[unknown]] = value;
      progress = true;
    }
  }
  for (const auto& r : relations) {
    if (r.lhs == 0 || r.rhs == 0) continue;
    if (!u[r.a.mask] || !u[r.b.mask] || !u[r.join.mask] || !u[r.meet.mask]) continue;
    if (r.lhs * *u[r.a.mask] * *u[r.b.mask] != r.rhs * *u[r.join.mask] * *u[r.meet.mask]) {
      verdict.reason = "inconsistent ratio assignment";
      for (auto& x : u) verdict.scaling.push_back(x ? *x : Rational(1));
      return verdict;
    }
  }
  for (auto& x : u) verdict.scaling.push_back(x ? *x : Rational(1));

  const std::size_t width = static_cast<std::size_t>(subsets * (subsets + 1) / 2);
  RowEchelon rel(width), segre(width), both(width);
  for (const auto& r : relations) {
    std::vector<Rational> row(width, Rational(0));
    row[quad_column(r.a.mask, r.b.mask, subsets)] += r.lhs * verdict.scaling[r.a.mask] * verdict.scaling[r.b.mask];
    row[quad_column(r.join.mask, r.meet.mask, subsets)] -=
        r.rhs * verdict.scaling[r.join.mask] * verdict.scaling[r.meet.mask];
    rel.add(row);
    both.add(std::move(row));
  }
  for (const auto& eq : segre_equations(n)) {
    std::vector<Rational> row(width, Rational(0));
    row[quad_column(eq.x, eq.y, subsets)] += 1;
    row[quad_column(eq.u, eq.v, subsets)] -= 1;
    segre.add(row);
    both.add(std::move(row));
  }
  if (rel.rank() != segre.rank() || both.rank() != segre.rank()) {
    verdict.reason = "span differs from the Segre quadrics (rank " + std::to_string(rel.rank()) + " vs " +
                     std::to_string(segre.rank()) + ", joint " + std::to_string(both.rank()) + ")";
    return verdict;
  }
  verdict.accepted = true;
  return verdict;
}

}  // namespace zck
