#include "tropsing/lifts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "tropsing/error.hpp"

namespace tropsing {

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "malformed series '" + std::string(text) + "': " + why);
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

Rational parse_number(std::string_view s, std::string_view whole) {
  s = strip_parens(s);
  if (s.empty()) parse_error(whole, "missing number");
  try {
    return parse_rational(s);
  } catch (const Error&) {
    parse_error(whole, "bad number '" + std::string(s) + "'");
  }
}

PuiseuxScalar::Term parse_term(std::string_view term, std::string_view whole) {
  Rational sign = 1;
  while (!term.empty() && (term.front() == '+' || term.front() == '-')) {
    if (term.front() == '-') sign = -sign;
    term.remove_prefix(1);
  }
  if (term.empty()) parse_error(whole, "empty term");
  const auto t = term.find('t');
  if (t == std::string_view::npos) return {0, sign * parse_number(term, whole)};
  Rational coefficient = 1;
  std::string_view head = term.substr(0, t);
  if (!head.empty()) {
    if (head.back() != '*') parse_error(whole, "expected '*' before t");
    head.remove_suffix(1);
    coefficient = parse_number(head, whole);
  }
  std::string_view tail = term.substr(t + 1);
  Rational exponent = 1;
  if (!tail.empty()) {
    if (tail.front() != '^') parse_error(whole, "expected '^' after t");
    exponent = parse_number(tail.substr(1), whole);
  }
  return {exponent, sign * coefficient};
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

PuiseuxScalar::PuiseuxScalar(const Rational& c) {
  if (c != 0) terms_.push_back({Rational(0), c});
}

PuiseuxScalar PuiseuxScalar::from_terms(std::vector<Term> terms) {
  std::map<Rational, Rational> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  PuiseuxScalar out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.push_back({e, c});
  }
  return out;
}

PuiseuxScalar PuiseuxScalar::monomial(const Rational& coefficient, const Rational& exponent) {
  return from_terms({{exponent, coefficient}});
}

std::optional<Rational> PuiseuxScalar::val() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

Rational PuiseuxScalar::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().second; }

PuiseuxScalar PuiseuxScalar::operator-() const {
  PuiseuxScalar out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

PuiseuxScalar& PuiseuxScalar::operator+=(const PuiseuxScalar& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.push_back({a->first, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PuiseuxScalar& PuiseuxScalar::operator-=(const PuiseuxScalar& rhs) { return *this += -rhs; }

PuiseuxScalar& PuiseuxScalar::operator*=(const PuiseuxScalar& rhs) {
  std::vector<Term> product;
  product.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) product.push_back({e1 + e2, c1 * c2});
  }
  *this = from_terms(std::move(product));
  return *this;
}

PuiseuxScalar parse_puiseux(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) parse_error(text, "empty input");
  std::vector<PuiseuxScalar::Term> terms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k < s.size()) {
      const char ch = s[k];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth < 0) parse_error(text, "unbalanced parentheses");
      const bool sign = ch == '+' || ch == '-';
      if (!sign || depth > 0 || k == start) continue;
      const char prev = s[k - 1];
      if (prev == '^' || prev == '*' || prev == '/' || prev == '+' || prev == '-') continue;
    }
    if (depth != 0) parse_error(text, "unbalanced parentheses");
    terms.push_back(parse_term(std::string_view(s).substr(start, k - start), text));
    start = k;
  }
  return PuiseuxScalar::from_terms(std::move(terms));
}

std::string to_string(const PuiseuxScalar& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    const bool negative = c < 0;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const Rational mag = abs(c);
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "t";
    if (e != 1) out += e.get_den() == 1 && e > 0 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
  }
  return out;
}

PuiseuxScalar evaluate(const PuiseuxPolynomial& f, const Rational& x, const Rational& y) {
  PuiseuxScalar out;
  for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
    const LatticePoint& m = f.config[k];
    Rational mono = 1;
    for (std::int64_t e = 0; e < std::abs(m.i); ++e) mono *= x;
    if (m.i < 0) mono = 1 / mono;
    Rational ypow = 1;
    for (std::int64_t e = 0; e < std::abs(m.j); ++e) ypow *= y;
    if (m.j < 0) ypow = 1 / ypow;
    out += f.coefficients[k] * PuiseuxScalar(mono * ypow);
  }
  return out;
}

std::vector<std::optional<Rational>> partial_neg_val_vector(const PuiseuxPolynomial& f) {
  std::vector<std::optional<Rational>> out;
  for (const auto& a : f.coefficients) {
    const auto v = a.val();
    out.push_back(v ? std::optional<Rational>(Rational(-*v)) : std::nullopt);
  }
  return out;
}

HeightVector neg_val_vector(const PuiseuxPolynomial& f) {
  HeightVector u;
  for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
    const auto v = f.coefficients[k].val();
    if (!v) throw Error(ErrorCode::ZeroCoefficient, "coefficient " + std::to_string(k) + " is zero");
    u.push_back(-*v);
  }
  return u;
}

std::vector<PuiseuxScalar> apply_matrix(const Matrix& a, const std::vector<PuiseuxScalar>& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  std::vector<PuiseuxScalar> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0) out[r] += PuiseuxScalar(a(r, c)) * v[c];
    }
  }
  return out;
}

std::array<PuiseuxScalar, 3> conditions_at_one_one(const PuiseuxPolynomial& f) {
  const auto rows = apply_matrix(coefficient_matrix(f.config), f.coefficients);
  return {rows[0], rows[1], rows[2]};
}

bool verify_singular_at_one_one(const PuiseuxPolynomial& f) {
  const auto c = conditions_at_one_one(f);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

PivotTriple weight_maximal_pivots(const Matrix& a, const HeightVector& w) {
  if (w.size() != a.cols()) throw Error(ErrorCode::InvalidArgument, "weight length mismatch");
  std::vector<std::size_t> order(a.cols());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w[x] > w[y]; });
  std::vector<std::size_t> chosen;
  for (std::size_t k : order) {
    chosen.push_back(k);
    if (column_rank(a, chosen) < chosen.size()) chosen.pop_back();
    if (chosen.size() == 3) break;
  }
  if (chosen.size() != 3) throw Error(ErrorCode::DependentPivots, "matrix has rank below three");
  std::sort(chosen.begin(), chosen.end());
  return {chosen[0], chosen[1], chosen[2]};
}

std::vector<Rational> lift_exponents(const GaleDual& g, const HeightVector& w) {
  if (w.size() != g.b.cols()) throw Error(ErrorCode::InvalidArgument, "weight length mismatch");
  std::vector<Rational> out;
  for (std::size_t c = 0; c < g.b.cols(); ++c) {
    if (std::find(g.pivots.begin(), g.pivots.end(), c) == g.pivots.end()) out.push_back(-w[c]);
  }
  return out;
}

LiftSample sample_singular_lift(const PointConfiguration& config, const FlagOfFlats& flag,
                                const std::vector<Rational>& exponents, std::uint64_t seed,
                                std::optional<PivotTriple> pivots, std::size_t retries) {
  const Matrix a = coefficient_matrix(config);
  const GaleDual g = gale_dual(a, pivots);
  const Matrix& b = g.b;
  if (exponents.size() != b.rows()) throw Error(ErrorCode::InvalidArgument, "one exponent per kernel generator");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    std::vector<PuiseuxScalar> gamma_t;
    for (const auto& lambda : exponents) {
      Rational gamma(num(rng), den(rng));
      gamma.canonicalize();
      if (negative(rng)) gamma = -gamma;
      gamma_t.push_back(PuiseuxScalar::monomial(gamma, lambda));
    }
    PuiseuxPolynomial f{config, std::vector<PuiseuxScalar>(config.size())};
    bool cancelled = false;
    for (std::size_t k = 0; k < config.size() && !cancelled; ++k) {
      std::optional<Rational> expected;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        if (b(r, k) == 0) continue;
        f.coefficients[k] += PuiseuxScalar(b(r, k)) * gamma_t[r];
        if (!expected || exponents[r] < *expected) expected = exponents[r];
      }
      cancelled = !expected || f.coefficients[k].val() != expected;
    }
    if (cancelled) continue;
    LiftSample out{std::move(f), {}, false, attempt};
    out.u = neg_val_vector(out.f);
    out.in_weight_class = in_weight_class_closure(flag, out.u);
    return out;
  }
  throw Error(ErrorCode::RetryExhausted, "leading terms cancelled in every attempt");
}

PuiseuxPolynomial refine_substitution(const PuiseuxPolynomial& f) {
  std::map<LatticePoint, PuiseuxScalar> acc;
  std::vector<LatticePoint> support = f.config.points();
  bool grows = false;
  for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
    const LatticePoint& m = f.config[k];
    if (m.j < 0) throw Error(ErrorCode::NegativeExponent, "negative power of y");
    if (f.coefficients[k].is_zero()) continue;
    for (std::int64_t e = 0; e <= m.j; ++e) {
      const LatticePoint target{m.i, e};
      const Rational c(binomial(static_cast<unsigned long>(m.j), static_cast<unsigned long>(e)));
      acc[target] += PuiseuxScalar(c) * f.coefficients[k];
      if (f.config.index_of(target) == f.config.size()) {
        support.push_back(target);
        grows = true;
      }
    }
  }
  PuiseuxPolynomial out{grows ? PointConfiguration::from_polygon(support) : f.config, {}};
  for (const auto& m : out.config.points()) {
    const auto it = acc.find(m);
    out.coefficients.push_back(it == acc.end() ? PuiseuxScalar() : it->second);
  }
  return out;
}

}  // namespace tropsing
