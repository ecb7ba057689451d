#include <doctest.h>

#include <cmath>
#include <random>

#include "alphacf/series_eval.hpp"
#include "oracles.hpp"

using namespace alphacf;

namespace {

ExactNumber q(long p, long d) { return Rational(p, d); }
const ExactNumber kSilver = make_quadratic(-1, 1, 1, 2);
constexpr Precision kP = 256;

Real g_mpfr() { return (sqrt(Real::from_int(5, kP)) - Real::from_int(1, kP)) / Real::from_int(2, kP); }
Real lit(const char* s) { return Real::from_string(s, kP); }

// A 256-bit point in [lo, hi]. Values built from doubles would be short
// dyadic rationals whose orbits end after about 30 steps.
ExactNumber random_point(std::mt19937_64& rng, double lo, double hi) {
  mpz_class m = 0;
  for (int i = 0; i < 4; ++i) {
    m <<= 64;
    m += static_cast<unsigned long>(rng());
  }
  Real u(kP);
  mpfr_set_z_2exp(u.get(), m.get_mpz_t(), -256, MPFR_RNDN);
  return Float::point(Real::from_long_double(lo, kP) + Real::from_long_double(hi - lo, kP) * u);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("fixed-point closed forms at g") {
  const Real g = g_mpfr();
  const Real lg = -log(g);
  const Real one = Real::from_int(1, kP);
  const SeriesValue b1 = brjuno_k(golden_conjugate(), Alpha::one(), 1);
  CHECK(abs(b1.value - lg / (one - g)) < lit("1e-70"));
  CHECK(b1.rigorous_tail);
  CHECK(std::fabs(b1.value.to_double() - 1.2598289138) < 1e-9);
  CHECK(abs(brjuno_k(golden_conjugate(), Alpha::one(), 2).value - lg / (one - g * g)) < lit("1e-70"));
  const SeriesValue w = wilton(golden_conjugate(), Alpha::one());
  CHECK(abs(w.value - lg / (one + g)) < lit("1e-70"));
  CHECK(std::fabs(w.value.to_double() - 0.2974052) < 1e-6);
}

TEST_CASE("Wilton at sqrt(2) - 1") {
  const Real s2 = sqrt(Real::from_int(2, kP));
  const Real want = log(s2 + Real::from_int(1, kP)) / s2;
  CHECK(abs(wilton(kSilver, Alpha::one()).value - want) < lit("1e-70"));
}

TEST_CASE("series refuse rationals and zero") {
  CHECK(code_of([] { brjuno_k(q(2, 5), Alpha::one(), 1); }) == Errc::DivergesAtRational);
  CHECK(code_of([] { wilton(q(1, 3), Alpha::one()); }) == Errc::DivergesAtRational);
  CHECK(code_of([] { evaluate_completed(q(0, 1), Alpha::one(), SeriesMode::wilton()); }) == Errc::SingularPoint);
  CHECK(code_of([] { SeriesMode::brjuno(0); }) == Errc::InvalidArgument);
}

TEST_CASE("generic summation agrees with a long double Gauss oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const ExactNumber xf = random_point(rng, 0.01, 0.99);
    const long double x = approx(xf, 64).to_long_double();
    for (int k : {1, 2}) {
      const long double want = oracle::gauss_series(x, k, false, 60);
      // The long double orbit loses its digits once beta^2 reaches the
      // epsilon, which caps the oracle near 1e-9.
      CHECK(std::fabs(brjuno_k(xf, Alpha::one(), k).value.to_long_double() - want) < 1e-7L);
    }
    const long double wantw = oracle::gauss_series(x, 1, true, 60);
    CHECK(std::fabs(wilton(xf, Alpha::one()).value.to_long_double() - wantw) < 1e-7L);
  }
}

TEST_CASE("periodic closed form agrees with brute summation") {
  std::mt19937_64 rng(23);
  const std::vector<Alpha> alphas = {Alpha::half(), Alpha(q(3, 5)), Alpha::golden(), Alpha::one()};
  int tested = 0;
  for (int i = 0; i < 60; ++i) {
    const Alpha& a = alphas[i % alphas.size()];
    const ExactNumber y = make_quadratic(std::uniform_int_distribution<long>(-9, 9)(rng),
                                         std::uniform_int_distribution<long>(1, 5)(rng),
                                         std::uniform_int_distribution<long>(1, 9)(rng),
                                         std::uniform_int_distribution<long>(2, 30)(rng));
    if (!y.is_surd()) continue;
    const ExactNumber x = normalize(y, a).x;
    for (const SeriesMode mode : {SeriesMode::brjuno(1), SeriesMode::brjuno(3), SeriesMode::wilton()}) {
      const SeriesValue v = evaluate_series(x, a, mode);
      const Real brute = partial_sum(x, a, mode, 400, kP);
      CHECK(abs(v.value - brute) < lit("1e-40"));
    }
    ++tested;
  }
  CHECK(tested > 30);
}

TEST_CASE("completion is 1-periodic, and even on (0, 1 - alpha)") {
  const ExactNumber g3 = golden_conjugate() * golden_conjugate() * golden_conjugate();  // about 0.236
  const SeriesMode m = SeriesMode::wilton();
  for (const Alpha& a : {Alpha::half(), Alpha(q(7, 10)), Alpha::one()}) {
    const Real base = evaluate_completed(g3, a, m).value;
    CHECK(evaluate_completed(g3 + ExactNumber(3), a, m).value == base);
    CHECK(evaluate_completed(g3 - ExactNumber(2), a, m).value == base);
  }
  for (const Alpha& a : {Alpha::half(), Alpha(q(7, 10))}) {
    CHECK(abs(evaluate_completed(-g3, a, m).value - evaluate_completed(g3, a, m).value) < lit("1e-70"));
  }
}

TEST_CASE("finite sums at rationals") {
  const Real l2 = log(Real::from_int(2, kP)), l3 = log(Real::from_int(3, kP)), l5 = log(Real::from_int(5, kP));
  const Real tf = lit("0.4");
  const Real eps = lit("1e-70");
  CHECK(abs(brjuno_finite_rational(Rational(1, 2), 1) - l2) < eps);
  CHECK(abs(brjuno_finite_rational(Rational(1, 2), 4) - l2) < eps);
  CHECK(abs(brjuno_finite_rational(Rational(2, 5), 1) - (l5 - l2 + tf * l2)) < eps);
  CHECK(std::fabs(brjuno_finite_rational(Rational(2, 5), 1).to_double() - 1.1935496) < 1e-7);
  CHECK(brjuno_finite_rational(Rational(7), 3).is_zero());
  CHECK(abs(wilton_finite_rational(Rational(1, 3)) - l3) < eps);
  CHECK(abs(wilton_finite_rational(Rational(2, 5)) - (l5 - l2 - tf * l2)) < eps);
  CHECK(std::fabs(wilton_finite_rational(Rational(2, 5)).to_double() - 0.6390319) < 1e-7);
  CHECK(wilton_finite_rational(Rational(5)).is_zero());
  // Integer part is dropped.
  CHECK(abs(wilton_finite_rational(Rational(12, 5)) - wilton_finite_rational(Rational(2, 5))) < eps);
}

TEST_CASE("proxy sums over Fibonacci denominators") {
  const Real l2 = log(Real::from_int(2, kP)), l3 = log(Real::from_int(3, kP)), l5 = log(Real::from_int(5, kP));
  const Real eps = lit("1e-70");
  const ExactNumber g = golden_conjugate();
  CHECK(abs(proxy_sum(g, Alpha::one(), 1, 4, false) - (l2 + l3 / Real::from_int(2, kP) + l5 / Real::from_int(3, kP))) < eps);
  CHECK(abs(proxy_sum(g, Alpha::one(), 2, 4, false) - (l2 + l3 / Real::from_int(4, kP) + l5 / Real::from_int(9, kP))) < eps);
  CHECK(abs(proxy_sum(g, Alpha::one(), 1, 4, true) - (-l2 + l3 / Real::from_int(2, kP) - l5 / Real::from_int(3, kP))) < eps);
  CHECK(proxy_sum(g, Alpha::one(), 1, 0, false).is_zero());
  CHECK(code_of([] { proxy_sum(q(2, 5), Alpha::one(), 1, 5, false); }) == Errc::ExpansionTooShort);
}

TEST_CASE("apply_transfer on constants") {
  const RealFunction c = [](const ExactNumber&) { return Real::from_int(5, kP); };
  const RealFunction one = [](const ExactNumber&) { return Real::from_int(1, kP); };
  CHECK(abs(apply_transfer(c, 3, Alpha::one(), q(1, 3), 1) - Real::from_int(5, kP) / Real::from_int(27, kP)) <
        lit("1e-70"));
  CHECK(abs(apply_transfer(one, 2, Alpha::one(), q(1, 2), 1) - lit("0.25")) < lit("1e-70"));
  CHECK(abs(apply_transfer(one, 1, Alpha::one(), q(1, 2), -1) + lit("0.5")) < lit("1e-70"));
}

TEST_CASE("functional equation residuals vanish") {
  const Real tol = Real::from_string("1e-60", kP);
  CHECK(abs(functional_eq_residual(golden_conjugate(), Alpha::one(), SeriesMode::brjuno(1), 50)) < tol);
  CHECK(abs(functional_eq_residual(kSilver, Alpha::one(), SeriesMode::wilton(), 50)) < tol);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Alpha a = i % 2 ? Alpha::half() : Alpha(q(3, 5));
    const ExactNumber xf = random_point(rng, 0.05, 0.49);
    CHECK(abs(functional_eq_residual(xf, a, SeriesMode::brjuno(2), 30)) < tol);
  }
}

TEST_CASE("a decimal Float orbit terminates before 30 steps") {
  const ExactNumber x = ExactNumber::parse("0.39", kP);
  CHECK(code_of([&] { functional_eq_residual(x, Alpha(q(3, 5)), SeriesMode::brjuno(2), 30); }) ==
        Errc::PrecisionExhausted);
}

TEST_CASE("truncation bound") {
  CHECK(lemma_constant_cprime() == reciprocal(ExactNumber(1) - golden_conjugate()));
  CHECK(std::fabs(approx(lemma_constant_cprime(), 64).to_double() - 2.6180340) < 1e-7);
  const TruncationReport r = truncation_bound_check(golden_conjugate(), 10, SeriesMode::brjuno(1));
  CHECK(r.pass);
  CHECK(r.lhs < r.bound);
  CHECK(code_of([] { truncation_bound_check(q(2, 5), 10, SeriesMode::brjuno(1)); }) == Errc::ExpansionTooShort);
  for (const SeriesMode m : {SeriesMode::brjuno(1), SeriesMode::brjuno(2), SeriesMode::wilton()}) {
    for (const auto& rep : truncation_bound_scan(kSilver, 25, m)) CHECK(rep.pass);
  }
}

TEST_CASE("gap audit") {
  const GapAudit e = gap_audit({}, Alpha::one(), SeriesMode::brjuno(1), 60);
  CHECK(e.sup_gap.is_zero());
  CHECK(e.rows.empty());
  const GapAudit a = gap_audit({golden_conjugate()}, Alpha::one(), SeriesMode::brjuno(1), 40);
  const GapAudit b = gap_audit({golden_conjugate()}, Alpha::one(), SeriesMode::brjuno(1), 60);
  // Increments after depth n are of order n g^n.
  CHECK(abs(a.sup_gap - b.sup_gap) < Real::from_string("1e-6", kP));
  CHECK(a.sup_gap <= b.sup_gap);
  CHECK(b.sup_gap.to_double() < proof_constant_gap_bound(1));
  CHECK(std::fabs(proof_constant_gap_bound(1) - 18.2775) < 1e-4);
}

TEST_CASE("FastSeries agrees with the exact evaluator") {
  std::mt19937_64 rng(31);
  for (const Alpha& a : {Alpha::half(), Alpha(q(11, 20)), Alpha::one()}) {
    const FastSeries f(a.approx(), SeriesMode::wilton());
    for (int i = 0; i < 20; ++i) {
      const ExactNumber yf = random_point(rng, -2, 2);
      const long double y = approx(yf, 64).to_long_double();
      const long double exact = evaluate_completed(yf, a, SeriesMode::wilton()).value.to_long_double();
      CHECK(std::fabs(f(y) - exact) < 1e-7L);
    }
  }
}
