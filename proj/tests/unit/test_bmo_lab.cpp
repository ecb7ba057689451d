#include <doctest.h>

#include <cmath>
#include <random>

#include "alphacf/bmo_lab.hpp"

using namespace alphacf;

namespace {

const RationalInterval kUnit(Rational(0), Rational(1));

QuadratureOptions small_opts() {
  QuadratureOptions o;
  o.n_samples = 20000;
  return o;
}

}  // namespace

TEST_CASE("means of simple integrands") {
  CHECK(interval_mean([](long double) { return 7.0L; }, kUnit, small_opts()).mean == doctest::Approx(7.0));
  CHECK(interval_mean([](long double x) { return x; }, kUnit, small_opts()).mean == doctest::Approx(0.5));
  const RationalInterval i(Rational(1), Rational(3));
  CHECK(static_cast<double>(interval_mean([](long double x) { return x * x; }, i, small_opts()).mean) ==
        doctest::Approx(13.0 / 3).epsilon(1e-12));
  // int_0^1 -log x = 1
  const IntervalStats s = interval_mean([](long double x) { return -std::log(x); }, kUnit, small_opts());
  CHECK(static_cast<double>(s.mean) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("mean oscillation of simple integrands") {
  CHECK(mean_oscillation([](long double) { return 7.0L; }, kUnit, small_opts()).oscillation < 1e-15L);
  CHECK(static_cast<double>(mean_oscillation([](long double x) { return x; }, kUnit, small_opts()).oscillation) ==
        doctest::Approx(0.25).epsilon(1e-9));
  const auto step = [](long double x) { return x < 0.5L ? 0.0L : 1.0L; };
  CHECK(static_cast<double>(mean_oscillation(step, kUnit, small_opts()).oscillation) ==
        doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("oscillation of x on [0, L] scales with L") {
  for (int den : {2, 4, 8, 16}) {
    const RationalInterval i(Rational(0), Rational(1, den));
    CHECK(static_cast<double>(mean_oscillation([](long double x) { return x; }, i, small_opts()).oscillation) ==
          doctest::Approx(0.25 / den).epsilon(1e-9));
  }
}

TEST_CASE("concat_oscillation") {
  CHECK(static_cast<double>(concat_oscillation(0, 0, 0, 1, 1, 1)) == doctest::Approx(0.5));
  CHECK(static_cast<double>(concat_oscillation(0.2L, 0.6L, 3, 3, 1, 3)) == doctest::Approx((0.2 + 1.8) / 4));
  CHECK_THROWS_AS(concat_oscillation(0, 0, 0, 1, 0, 1), Error);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0, 2);
  for (int i = 0; i < 200; ++i) {
    const long double m1 = u(rng), m2 = u(rng), o1 = u(rng), o2 = u(rng);
    const long double f = concat_oscillation(o1, o2, m1, m2, 1, 1);
    CHECK(f >= std::fabs(m1 - m2) / 2 - 1e-15L);
    CHECK(concat_oscillation_lower_bound(m1, m2, 1, 1) == doctest::Approx(static_cast<double>(std::fabs(m1 - m2) / 2)));
  }
}

TEST_CASE("the two-piece formula bounds the union oscillation") {
  // f = x on [0, 1]: halves have O = 1/8, means 1/4 and 3/4; the formula
  // gives 1/8 + 1/4 = 3/8 while the union has 1/4.
  const auto id = [](long double x) { return x; };
  const IntervalStats l = mean_oscillation(id, RationalInterval(Rational(0), Rational(1, 2)), small_opts());
  const IntervalStats r = mean_oscillation(id, RationalInterval(Rational(1, 2), Rational(1)), small_opts());
  const IntervalStats u = mean_oscillation(id, kUnit, small_opts());
  const long double f = concat_oscillation(l.oscillation, r.oscillation, l.mean, r.mean, 0.5L, 0.5L);
  CHECK(static_cast<double>(f) == doctest::Approx(0.375).epsilon(1e-9));
  CHECK(u.oscillation <= f);
  CHECK(concat_oscillation_lower_bound(l.mean, r.mean, 0.5L, 0.5L) <= u.oscillation);
}

TEST_CASE("dyadic scan") {
  CHECK(bmo_seminorm_scan([](long double) { return 3.0L; }, kUnit, 6).sup_estimate < 1e-15L);
  const ScanResult s = bmo_seminorm_scan([](long double x) { return x; }, kUnit, 6);
  CHECK(static_cast<double>(s.sup_estimate) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(s.argmax == kUnit);
  CHECK(s.level_sup.size() == 7);
  CHECK(s.leaves == 64);
  // Each level halves the oscillation of a linear function.
  for (std::size_t i = 1; i < s.level_sup.size(); ++i) {
    CHECK(static_cast<double>(s.level_sup[i] * 2) == doctest::Approx(static_cast<double>(s.level_sup[i - 1])));
  }
}

TEST_CASE("scan of W_1 near 0 exceeds log 8") {
  const FastSeries w(1.0L, SeriesMode::wilton());
  const ScanResult s =
      bmo_seminorm_scan([&w](long double y) { return w(y); }, RationalInterval(Rational(-1, 8), Rational(1, 8)), 10);
  CHECK(s.sup_estimate > std::log(8.0L));
}

TEST_CASE("Wilton blow-up rows") {
  QuadratureOptions o;
  o.n_samples = 40000;
  const BlowupExperiment b = wilton_blowup_experiment({16, 64}, o);
  REQUIRE(b.rows.size() == 2);
  for (const BlowupRow& r : b.rows) {
    const long double logn = std::log(static_cast<long double>(r.n));
    CHECK(std::fabs(r.mean_plus - (logn + 1)) < 0.5L);
    // At alpha = 1 the left half is W(1 - t), which behaves like log t.
    CHECK(std::fabs(r.mean_plus + r.mean_minus) < 0.5L);
    CHECK(r.oscillation >= logn);
  }
}

TEST_CASE("degenerate intervals are rejected") {
  CHECK_THROWS_AS(RationalInterval(Rational(1), Rational(1)), Error);
  CHECK_THROWS_AS(RationalInterval(Rational(1), Rational(0)), Error);
}
