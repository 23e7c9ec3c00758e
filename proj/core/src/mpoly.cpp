#include "zck/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace zck {

namespace {

// Descending lexicographic comparison of exponent rows.
int compare_rows(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

using RemainderMap = std::map<Monomial, Rational, std::greater<>>;

Rational rational_pow(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool exact_div_impl(const MPoly& f, const MPoly& g, MPoly* quotient) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const std::size_t n = f.nvars();
  MPoly q(n);
  if (f.is_zero()) {
    if (quotient) *quotient = q;
    return true;
  }
  const auto lead_g = g.exponents(0);
  const Rational& lc_g = g.leading_coefficient();

  RemainderMap rem;
  for (std::size_t t = 0; t < f.term_count(); ++t) {
    auto e = f.exponents(t);
    rem.emplace(Monomial(e.begin(), e.end()), f.coefficient(t));
  }
  std::map<Monomial, Rational> qterms;
  Monomial shift(n);
  while (!rem.empty()) {
    auto it = rem.begin();
    const Monomial& lead = it->first;
    for (std::size_t v = 0; v < n; ++v) {
      if (lead[v] < lead_g[v]) return false;
      shift[v] = lead[v] - lead_g[v];
    }
    Rational c = it->second / lc_g;
    qterms.emplace(shift, c);
    rem.erase(it);
    for (std::size_t t = 1; t < g.term_count(); ++t) {
      auto ge = g.exponents(t);
      Monomial m(n);
      for (std::size_t v = 0; v < n; ++v) m[v] = ge[v] + shift[v];
      Rational delta = c * g.coefficient(t);
      auto [pos, inserted] = rem.try_emplace(std::move(m), -delta);
      if (!inserted) {
        pos->second -= delta;
        if (pos->second == 0) rem.erase(pos);
      }
    }
  }
  if (quotient) *quotient = MPoly::from_terms(n, qterms);
  return true;
}

}  // namespace

void MPoly::push_term(std::span<const Exponent> e, Rational c) {
  exps_.insert(exps_.end(), e.begin(), e.end());
  coeffs_.push_back(std::move(c));
}

void MPoly::check_same_ring(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: operands live in different rings");
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  if (c != 0) {
    Monomial zero(nvars, 0);
    Rational canon = c;
    canon.canonicalize();
    p.push_term(zero, std::move(canon));
  }
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("MPoly::variable: index out of range");
  Monomial e(nvars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

MPoly MPoly::difference(std::size_t nvars, std::size_t x, std::size_t y) {
  return variable(nvars, x) - variable(nvars, y);
}

MPoly MPoly::monomial(const Monomial& exps, const Rational& c) {
  MPoly p(exps.size());
  Rational canon = c;
  canon.canonicalize();
  if (canon != 0) p.push_term(exps, std::move(canon));
  return p;
}

MPoly MPoly::from_terms(std::size_t nvars, const std::map<Monomial, Rational>& terms) {
  MPoly p(nvars);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->first.size() != nvars) throw std::invalid_argument("MPoly: exponent width mismatch");
    Rational canon = it->second;
    canon.canonicalize();
    if (canon != 0) p.push_term(it->first, std::move(canon));
  }
  return p;
}

bool MPoly::is_constant() const {
  if (is_zero()) return true;
  if (term_count() > 1) return false;
  auto e = exponents(0);
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("MPoly: not a constant");
  return is_zero() ? Rational(0) : coeffs_[0];
}

Rational MPoly::coefficient_of(std::span<const Exponent> exps) const {
  // Binary search over the sorted rows.
  std::size_t lo = 0, hi = term_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare_rows(exponents(mid), exps);
    if (c == 0) return coeffs_[mid];
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return 0;
}

const Rational& MPoly::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("MPoly: zero polynomial has no leading coefficient");
  return coeffs_[0];
}

std::size_t MPoly::total_degree() const {
  std::size_t best = 0;
  for (std::size_t t = 0; t < term_count(); ++t) {
    std::size_t d = 0;
    for (auto x : exponents(t)) d += x;
    best = std::max(best, d);
  }
  return best;
}

Exponent MPoly::degree_in(std::size_t var) const {
  Exponent best = 0;
  for (std::size_t t = 0; t < term_count(); ++t) best = std::max(best, exps_[t * nvars_ + var]);
  return best;
}

bool MPoly::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

MPoly merge_add(const MPoly& a, const MPoly& b, int sign) {
  a.check_same_ring(b);
  MPoly r(a.nvars_);
  r.exps_.reserve(a.exps_.size() + b.exps_.size());
  r.coeffs_.reserve(a.term_count() + b.term_count());
  std::size_t i = 0, j = 0;
  while (i < a.term_count() || j < b.term_count()) {
    int c;
    if (i == a.term_count()) c = 1;
    else if (j == b.term_count()) c = -1;
    else c = compare_rows(a.exponents(i), b.exponents(j));
    if (c < 0) {
      r.push_term(a.exponents(i), a.coeffs_[i]);
      ++i;
    } else if (c > 0) {
      r.push_term(b.exponents(j), sign > 0 ? b.coeffs_[j] : Rational(-b.coeffs_[j]));
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a.coeffs_[i] + b.coeffs_[j]) : Rational(a.coeffs_[i] - b.coeffs_[j]);
      if (s != 0) r.push_term(a.exponents(i), std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) { return *this = merge_add(*this, o, +1); }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = merge_add(*this, o, -1); }

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    exps_.clear();
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_ring(b);
  const std::size_t n = a.nvars_;
  if (a.is_zero() || b.is_zero()) return MPoly(n);
  const MPoly& small = a.term_count() <= b.term_count() ? a : b;
  const MPoly& big = a.term_count() <= b.term_count() ? b : a;

  if (small.term_count() <= 8) {
    // Monomial order is multiplicative: each shifted copy of `big` stays sorted.
    MPoly acc(n);
    for (std::size_t t = 0; t < small.term_count(); ++t) {
      auto se = small.exponents(t);
      MPoly shifted(n);
      shifted.exps_ = big.exps_;
      shifted.coeffs_.reserve(big.term_count());
      for (std::size_t u = 0; u < big.term_count(); ++u) {
        for (std::size_t v = 0; v < n; ++v) shifted.exps_[u * n + v] += se[v];
        shifted.coeffs_.push_back(big.coeffs_[u] * small.coeffs_[t]);
      }
      acc = t == 0 ? std::move(shifted) : merge_add(acc, shifted, +1);
    }
    return acc;
  }

  std::map<Monomial, Rational> acc;
  Monomial m(n);
  for (std::size_t t = 0; t < small.term_count(); ++t) {
    auto se = small.exponents(t);
    for (std::size_t u = 0; u < big.term_count(); ++u) {
      auto be = big.exponents(u);
      for (std::size_t v = 0; v < n; ++v) m[v] = se[v] + be[v];
      auto [pos, inserted] = acc.try_emplace(m, small.coeffs_[t] * big.coeffs_[u]);
      if (!inserted) pos->second += small.coeffs_[t] * big.coeffs_[u];
    }
  }
  return MPoly::from_terms(n, acc);
}

bool MPoly::operator==(const MPoly& o) const {
  return nvars_ == o.nvars_ && exps_ == o.exps_ && coeffs_ == o.coeffs_;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) throw std::invalid_argument("MPoly::evaluate: point does not assign every variable");
  Rational sum = 0;
  for (std::size_t t = 0; t < term_count(); ++t) {
    Rational term = coeffs_[t];
    auto e = exponents(t);
    for (std::size_t v = 0; v < nvars_ && term != 0; ++v) {
      if (e[v] != 0) term *= rational_pow(point[v], e[v]);
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::substitute(std::span<const MPoly> images, std::size_t target_nvars) const {
  if (images.size() != nvars_) throw std::invalid_argument("MPoly::substitute: image count mismatch");
  MPoly sum(target_nvars);
  for (std::size_t t = 0; t < term_count(); ++t) {
    MPoly term = constant(target_nvars, coeffs_[t]);
    auto e = exponents(t);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) term *= images[v].pow(e[v]);
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::swap_variables(std::size_t x, std::size_t y) const {
  if (x >= nvars_ || y >= nvars_) throw std::out_of_range("MPoly::swap_variables: index out of range");
  std::map<Monomial, Rational> terms;
  for (std::size_t t = 0; t < term_count(); ++t) {
    auto e = exponents(t);
    Monomial m(e.begin(), e.end());
    std::swap(m[x], m[y]);
    terms.emplace(std::move(m), coeffs_[t]);
  }
  return from_terms(nvars_, terms);
}

MPoly MPoly::extend(std::size_t new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("MPoly::extend: cannot shrink");
  MPoly r(new_nvars);
  Monomial m(new_nvars, 0);
  for (std::size_t t = 0; t < term_count(); ++t) {
    auto e = exponents(t);
    std::copy(e.begin(), e.end(), m.begin());
    r.push_term(m, coeffs_[t]);
  }
  return r;
}

Rational MPoly::primitive_scale() const {
  if (is_zero()) return 1;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  f.check_same_ring(g);
  MPoly q;
  if (!exact_div_impl(f, g, &q)) throw NonExactDivision("polynomial division is not exact");
  return q;
}

bool divides(const MPoly& g, const MPoly& f, MPoly* quotient) {
  if (g.nvars() != f.nvars()) throw std::invalid_argument("MPoly: operands live in different rings");
  return exact_div_impl(f, g, quotient);
}

std::string format(const MPoly& p, const std::vector<std::string>& names) {
  if (names.size() < p.nvars()) throw std::invalid_argument("format: too few variable names");
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    const Rational& c = p.coefficient(t);
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto e = p.exponents(t);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(names[i], i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("parse_mpoly: " + what + " at offset " + std::to_string(pos) + " in '" +
                                std::string(text) + "'");
  };
  auto read_digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  MPoly result(n);
  skip_ws();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = sign;
    Monomial mono(n, 0);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos == text.size()) break;
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = read_digits();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          std::string den = read_digits();
          if (den.empty()) fail("malformed rational");
          coeff *= parse_rational(num + "/" + den);
        } else {
          coeff *= Rational(Integer(num));
        }
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        std::string name(text.substr(start, pos - start));
        auto it = index.find(name);
        if (it == index.end()) fail("unknown variable '" + name + "'");
        Exponent e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::string d = read_digits();
          if (d.empty()) fail("malformed exponent");
          e = static_cast<Exponent>(std::stoul(d));
        }
        mono[it->second] += e;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    result += MPoly::monomial(mono, coeff);
  }
  return result;
}

}  // namespace zck
