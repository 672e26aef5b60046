#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sampling.hpp"
#include "tropsing/error.hpp"
#include "tropsing/lifts.hpp"
#include "tropsing/singularity.hpp"

using namespace tropsing;
using fixtures::idx;

namespace {

PuiseuxPolynomial intro_f() {
  // xy^2 - t x^2 - (2 + t^3) xy + (1 + 2t + t^3) x + t^3 y - (t + t^3)
  const auto c = fixtures::intro();
  std::vector<PuiseuxScalar> a(c.size());
  a[idx(c, 0, 0)] = parse_puiseux("-t - t^3");
  a[idx(c, 1, 0)] = parse_puiseux("1 + 2*t + t^3");
  a[idx(c, 2, 0)] = parse_puiseux("-t");
  a[idx(c, 0, 1)] = parse_puiseux("t^3");
  a[idx(c, 1, 1)] = parse_puiseux("-2 - t^3");
  a[idx(c, 1, 2)] = parse_puiseux("1");
  return {c, a};
}

Rational nu_hat(const PuiseuxPolynomial& f, std::int64_t i, std::int64_t j) {
  return -*f.coefficients[idx(f.config, i, j)].val();
}

}  // namespace

TEST_CASE("series parsing and printing") {
  CHECK(parse_puiseux("t + t^3").val() == Rational(1));
  CHECK(parse_puiseux("2 + t^3").val() == Rational(0));
  CHECK(parse_puiseux("2 + t^3").leading_coefficient() == 2);
  const auto q = parse_puiseux("1/2*t^(1/3) - t^-1 + 3 - 3");
  REQUIRE(q.terms().size() == 2);
  CHECK(q.val() == Rational(-1));
  CHECK(q.leading_coefficient() == -1);
  CHECK(parse_puiseux(to_string(q)) == q);
  CHECK(to_string(parse_puiseux("-t - t^3")) == "-t - t^3");
  CHECK(parse_puiseux("0").is_zero());
  CHECK_FALSE(parse_puiseux("0").val());
  CHECK(parse_puiseux("(-2)*t^(3/2)") == PuiseuxScalar::monomial(-2, Rational(3, 2)));
  for (const char* bad : {"", "1/0", "2t", "t^", "t^x", "(1", "1 +", "t*2"}) {
    try {
      parse_puiseux(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("series arithmetic") {
  const auto one_plus = parse_puiseux("1 + t");
  const auto one_minus = parse_puiseux("1 - t");
  CHECK(one_plus * one_minus == parse_puiseux("1 - t^2"));
  CHECK((one_plus + one_minus) == PuiseuxScalar(2));
  CHECK((one_plus - one_plus).is_zero());
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    std::vector<PuiseuxScalar> xs;
    for (int k = 0; k < 3; ++k) {
      xs.push_back(PuiseuxScalar::monomial(fixtures::random_rational(rng), fixtures::random_rational(rng, 3, 2)) +
                   PuiseuxScalar::monomial(fixtures::random_rational(rng), fixtures::random_rational(rng, 3, 2)));
    }
    CHECK(xs[0] * (xs[1] + xs[2]) == xs[0] * xs[1] + xs[0] * xs[2]);
    CHECK((xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2]));
    if (!xs[0].is_zero() && !xs[1].is_zero()) CHECK((xs[0] * xs[1]).val() == *xs[0].val() + *xs[1].val());
  }
}

TEST_CASE("intro polynomial") {
  const auto f = intro_f();
  CHECK(neg_val_vector(f) == fixtures::intro_heights());
  CHECK(verify_singular_at_one_one(f));
  for (const auto& c : conditions_at_one_one(f)) CHECK(c.is_zero());
}

TEST_CASE("nonsingular and zero coefficients") {
  const auto c = fixtures::unit_triangle();
  PuiseuxPolynomial f{c, {PuiseuxScalar(-2), PuiseuxScalar(1), PuiseuxScalar(1)}};
  const auto cond = conditions_at_one_one(f);
  CHECK(cond[0].is_zero());
  CHECK(cond[1] == PuiseuxScalar(1));
  CHECK_FALSE(verify_singular_at_one_one(f));
  f.coefficients[1] = PuiseuxScalar();
  try {
    neg_val_vector(f);
    FAIL("expected ZeroCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCoefficient);
  }
  const auto partial = partial_neg_val_vector(f);
  CHECK(partial[0] == Rational(0));
  CHECK_FALSE(partial[1]);
}

TEST_CASE("singular lifts of weight class samples") {
  std::mt19937_64 rng(7);
  std::size_t lifts = 0, inside = 0;
  for (const auto& c : {fixtures::unit_square(), fixtures::five_point(), fixtures::intro(), fixtures::area_three()}) {
    const Matrix a = coefficient_matrix(c);
    for (const auto& flag : enumerate_flags(gale_dual(a))) {
      for (int n = 0; n < 4; ++n) {
        const auto w = sampling::sample(flag, c.size(), rng);
        const auto pivots = weight_maximal_pivots(a, w);
        const auto lambda = lift_exponents(gale_dual(a, pivots), w);
        const auto lift = sample_singular_lift(c, flag, lambda, rng(), pivots);
        ++lifts;
        CHECK(verify_singular_at_one_one(lift.f));
        for (const auto& row : apply_matrix(a, lift.f.coefficients)) CHECK(row.is_zero());
        CHECK(lift.u == neg_val_vector(lift.f));
        CHECK(bergman_member_circuit_oracle(a, lift.u));
        CHECK(lift.in_weight_class == in_weight_class_closure(flag, lift.u));
        inside += lift.u == w;
        CHECK(lift.in_weight_class == (lift.u == w));
      }
    }
  }
  CHECK(inside == lifts);
}

TEST_CASE("lifts with equal exponents and the single generator") {
  std::mt19937_64 rng(11);
  for (const auto& c : fixtures::small_configs()) {
    if (c.size() < 4 || c.size() > 9) continue;
    const Matrix a = coefficient_matrix(c);
    const auto flags = enumerate_flags(gale_dual(a));
    const auto lift =
        sample_singular_lift(c, flags.front(), std::vector<Rational>(c.size() - 3, Rational(0)), rng());
    CHECK(verify_singular_at_one_one(lift.f));
    for (const auto& x : lift.u) CHECK(x == 0);
    CHECK(bergman_member_circuit_oracle(a, lift.u));
  }
  const auto sq = fixtures::unit_square();
  const auto g = gale_dual(coefficient_matrix(sq));
  const auto lift = sample_singular_lift(sq, enumerate_flags(g).front(), {Rational(2)}, 5);
  const Rational gamma = lift.f.coefficients[3].leading_coefficient();
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(lift.f.coefficients[k] == PuiseuxScalar::monomial(gamma * g.b(0, k), 2));
  }
  CHECK(verify_singular_at_one_one(lift.f));
  try {
    sample_singular_lift(sq, enumerate_flags(g).front(), {Rational(0)}, 1, std::nullopt, 0);
    FAIL("expected RetryExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RetryExhausted);
  }
}

TEST_CASE("substitution y to y + 1") {
  const auto f = intro_f();
  const auto g = refine_substitution(f);
  const auto& c = g.config;
  CHECK(c == f.config);
  CHECK(g.coefficients[idx(c, 1, 2)] == PuiseuxScalar(1));
  CHECK(g.coefficients[idx(c, 1, 1)] == parse_puiseux("-t^3"));
  CHECK(g.coefficients[idx(c, 2, 0)] == parse_puiseux("-t"));
  CHECK(g.coefficients[idx(c, 1, 0)] == parse_puiseux("2*t"));
  CHECK(g.coefficients[idx(c, 0, 1)] == parse_puiseux("t^3"));
  CHECK(g.coefficients[idx(c, 0, 0)] == parse_puiseux("-t"));
  CHECK(nu_hat(g, 0, 0) == -1);
  CHECK(nu_hat(g, 2, 0) == -1);

  // no y-dependence, and constants
  const auto tri = fixtures::unit_triangle();
  const PuiseuxPolynomial flat{tri, {parse_puiseux("t"), parse_puiseux("2 - t"), PuiseuxScalar()}};
  CHECK(refine_substitution(flat) == flat);
  const PuiseuxPolynomial constant{tri, {parse_puiseux("1 + t^(1/2)"), PuiseuxScalar(), PuiseuxScalar()}};
  CHECK(refine_substitution(constant) == constant);

  // support growing below the polygon
  const auto up = PointConfiguration::from_polygon({{1, 1}, {2, 1}, {1, 2}});
  const PuiseuxPolynomial high{up, {PuiseuxScalar(1), PuiseuxScalar(1), PuiseuxScalar(1)}};
  const auto low = refine_substitution(high);
  CHECK(low.config.index_of({1, 0}) < low.config.size());
  CHECK(low.coefficients[idx(low.config, 1, 0)] == PuiseuxScalar(2));

  try {
    refine_substitution({PointConfiguration({{0, -1}, {1, 0}, {0, 0}}), {1, 1, 1}});
    FAIL("expected NegativeExponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeExponent);
  }
}

TEST_CASE("substitution agrees with evaluation") {
  std::mt19937_64 rng(13);
  const auto c = fixtures::eight_point();
  const Matrix a = coefficient_matrix(c);
  const auto flags = enumerate_flags(gale_dual(a));
  for (int n = 0; n < 20; ++n) {
    const auto& flag = flags[rng() % flags.size()];
    const auto w = sampling::sample(flag, c.size(), rng);
    const auto pivots = weight_maximal_pivots(a, w);
    const auto f = sample_singular_lift(c, flag, lift_exponents(gale_dual(a, pivots), w), rng(), pivots).f;
    const auto g = refine_substitution(f);
    const Rational x = fixtures::random_rational(rng), y = fixtures::random_rational(rng);
    CHECK(evaluate(f, x, y + 1) == evaluate(g, x, y));
  }
}

TEST_CASE("b.1 lifts have equal refined valuations beside the circuit") {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (const auto& c : {fixtures::intro(), fixtures::square3(), fixtures::eight_point()}) {
    const Matrix a = coefficient_matrix(c);
    const auto flags = enumerate_flags(gale_dual(a));
    std::size_t local = 0;
    for (std::size_t attempt = 0; attempt < 4000 && local < 40; ++attempt) {
      const auto& flag = flags[rng() % flags.size()];
      const auto fc = classify_flag(flag, c);
      if (fc.which != FlagClass::Case::B) continue;
      const auto w = sampling::sample(flag, c.size(), rng);
      const auto report = classify_singularity(c, w);
      if (report.kind != SingularityKind::TypeB1) continue;
      const auto& z = std::get<EdgeWitness>(report.witness).circuit.indices;
      const std::int64_t k = c[z[0]].i;
      if (c[z[1]].i != k || c[z[2]].i != k || c[z[0]].j != 0) continue;
      const auto pivots = weight_maximal_pivots(a, w);
      const auto lift = sample_singular_lift(c, flag, lift_exponents(gale_dual(a, pivots), w), rng(), pivots);
      const auto g = refine_substitution(lift.f);
      REQUIRE_FALSE(g.coefficients[idx(g.config, k - 1, 0)].is_zero());
      REQUIRE_FALSE(g.coefficients[idx(g.config, k + 1, 0)].is_zero());
      CHECK(nu_hat(g, k - 1, 0) == nu_hat(g, k + 1, 0));
      ++local;
      ++checked;
    }
  }
  CHECK(checked >= 50);
}
