#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropsing/lattice.hpp"
#include "tropsing/matroid.hpp"

namespace tropsing {

/// Finite sum of c t^q with rational q and c.
class PuiseuxScalar {
 public:
  using Term = std::pair<Rational, Rational>;  // (exponent, coefficient)

  PuiseuxScalar() = default;
  PuiseuxScalar(const Rational& c);
  PuiseuxScalar(long c) : PuiseuxScalar(Rational(c)) {}

  /// Sums like terms, drops zeros and sorts by exponent.
  static PuiseuxScalar from_terms(std::vector<Term> terms);
  static PuiseuxScalar monomial(const Rational& coefficient, const Rational& exponent);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Least exponent; nullopt for zero.
  std::optional<Rational> val() const;
  /// Coefficient of the least exponent; zero for zero.
  Rational leading_coefficient() const;

  PuiseuxScalar operator-() const;
  PuiseuxScalar& operator+=(const PuiseuxScalar& rhs);
  PuiseuxScalar& operator-=(const PuiseuxScalar& rhs);
  PuiseuxScalar& operator*=(const PuiseuxScalar& rhs);

  friend PuiseuxScalar operator+(PuiseuxScalar a, const PuiseuxScalar& b) { return a += b; }
  friend PuiseuxScalar operator-(PuiseuxScalar a, const PuiseuxScalar& b) { return a -= b; }
  friend PuiseuxScalar operator*(PuiseuxScalar a, const PuiseuxScalar& b) { return a *= b; }
  friend bool operator==(const PuiseuxScalar& a, const PuiseuxScalar& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Parses "c0*t^q0 + c1*t^q1 + ...". Accepts bare constants, "t", "t^q",
/// "c*t", "t^(p/q)" and leading signs. Throws Error(ParseError).
PuiseuxScalar parse_puiseux(std::string_view text);

std::string to_string(const PuiseuxScalar& a);

/// f = sum a_k x^i y^j over the configuration points m_k = (i, j).
struct PuiseuxPolynomial {
  PointConfiguration config;
  std::vector<PuiseuxScalar> coefficients;

  friend bool operator==(const PuiseuxPolynomial&, const PuiseuxPolynomial&) = default;
};

/// Exact value at rational (x, y).
PuiseuxScalar evaluate(const PuiseuxPolynomial& f, const Rational& x, const Rational& y);

/// u_k = -val(a_k). Throws ZeroCoefficient if some a_k is zero.
HeightVector neg_val_vector(const PuiseuxPolynomial& f);

/// As above with zero coefficients reported as absent.
std::vector<std::optional<Rational>> partial_neg_val_vector(const PuiseuxPolynomial& f);

/// f, df/dx and df/dy at (1, 1), exactly.
std::array<PuiseuxScalar, 3> conditions_at_one_one(const PuiseuxPolynomial& f);

bool verify_singular_at_one_one(const PuiseuxPolynomial& f);

/// A times the coefficient vector, one series per row.
std::vector<PuiseuxScalar> apply_matrix(const Matrix& a, const std::vector<PuiseuxScalar>& v);

/// A basis of the column matroid of A of greatest total weight, greedily.
/// With these pivots and lift_exponents, a generic lift has -val = w for
/// every w in the Bergman fan.
PivotTriple weight_maximal_pivots(const Matrix& a, const HeightVector& w);

/// Exponents t^{lambda_r} for the rows of B that put -val at w on the
/// non-pivot columns.
std::vector<Rational> lift_exponents(const GaleDual& g, const HeightVector& w);

struct LiftSample {
  PuiseuxPolynomial f;
  HeightVector u;  // neg_val_vector(f)
  bool in_weight_class = false;  // u in the closure of the flag's weight class
  std::size_t attempts = 0;
};

/// a = sum_r gamma_r t^{lambda_r} b_r over the rows of the Gale dual, with
/// random nonzero rational gamma_r; redrawn while some entry has a cancelled
/// leading term, at most `retries` times.
LiftSample sample_singular_lift(const PointConfiguration& config, const FlagOfFlats& flag,
                                const std::vector<Rational>& exponents, std::uint64_t seed,
                                std::optional<PivotTriple> pivots = std::nullopt, std::size_t retries = 32);

/// f(x, y + 1) on the lattice points of the hull of the old and new supports.
/// Throws NegativeExponent if some point has j < 0.
PuiseuxPolynomial refine_substitution(const PuiseuxPolynomial& f);

}  // namespace tropsing
