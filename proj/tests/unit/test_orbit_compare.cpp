#include <doctest.h>

#include <cmath>
#include <random>

#include "alphacf/orbit_compare.hpp"
#include "oracles.hpp"

using namespace alphacf;

namespace {

ExactNumber q(long p, long d) { return Rational(p, d); }

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

TEST_CASE("Matrix2 algebra") {
  const Matrix2 f{1, 1, 1, 0};
  const Matrix2 f10 = f.power(10);
  CHECK(f10 == Matrix2{89, 55, 55, 34});
  CHECK(f * f.inverse() == Matrix2::identity());
  CHECK(f.power(0) == Matrix2::identity());
  CHECK(code_of([] { Matrix2{2, 0, 0, 1}.inverse(); }) == Errc::InvalidArgument);
}

TEST_CASE("mobius_apply") {
  const Matrix2 s{0, -1, 1, 0};
  CHECK(mobius_apply(s, q(2, 5)) == q(-5, 2));
  CHECK(mobius_apply(Matrix2{1, 1, 0, 1}, golden_conjugate()) == ExactNumber(1) + golden_conjugate());
  // 1/(1 + g) = g
  CHECK(mobius_apply(Matrix2{0, 1, 1, 1}, golden_conjugate()) == golden_conjugate());
  CHECK(code_of([] { mobius_apply(Matrix2{0, 1, 1, 0}, q(0, 1)); }) == Errc::PoleHit);
  CHECK(code_of([] { mobius_apply(Matrix2{1, 0, 0, 2}, q(1, 3)); }) == Errc::InvalidArgument);
}

TEST_CASE("ladders") {
  CHECK(ladder(0).t == Rational(1, 2));
  CHECK(ladder(1).t == Rational(2, 5));
  CHECK(ladder(2).t == Rational(5, 13));
  CHECK(ladder(2).rs() == Rational(3, 8));
  const auto seq = ladder_sequence(15);
  REQUIRE(seq.size() == 15);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    CHECK(seq[i].t == ladder(i).t);
    CHECK(seq[i].r == seq[i - 1].s);
    CHECK(seq[i].s * seq[i - 1].r - seq[i].r * seq[i - 1].s == -1);
    // One 1/2-step maps t_i back to t_{i-1}.
    CHECK(alpha_step(ExactNumber(seq[i].t), Alpha::half()).next == ExactNumber(seq[i - 1].t));
    CHECK(seq[i].rs() < seq[i].t);
  }
  const double one_minus_g = (3 - std::sqrt(5.0)) / 2;
  CHECK(std::fabs(approx(ExactNumber(seq[14].t), 64).to_double() - one_minus_g) < 1e-10);
}

TEST_CASE("matched orbits at alpha = 1/2 coincide") {
  const MatchedTrace t = matched_orbits(q(5, 13), Alpha::half(), 10);
  CHECK(t.terminated);
  CHECK(t.divergences.empty());
  for (const MatchedStep& s : t.steps) {
    CHECK(s.event == StepEvent::Coincide);
    CHECK(s.half == s.alpha);
    CHECK(s.q_half == s.q_alpha);
  }
}

TEST_CASE("matched orbits domain") {
  CHECK(code_of([] { matched_orbits(q(3, 5), Alpha(q(11, 20)), 10); }) == Errc::OutOfDomain);
  CHECK(code_of([] { matched_orbits(q(1, 3), Alpha(q(7, 10)), 10); }) == Errc::OutOfRange);
}

TEST_CASE("matched orbit digits match independent expansions") {
  std::mt19937_64 rng(43);
  for (const ExactNumber& a : {q(13, 25), q(29, 50), golden_conjugate()}) {
    const Alpha al(a);
    for (int i = 0; i < 30; ++i) {
      const long den = std::uniform_int_distribution<long>(3, 5000)(rng);
      mpq_class x(std::uniform_int_distribution<long>(1, den / 2)(rng), den);
      x.canonicalize();
      const MatchedTrace t = matched_orbits(Rational(x), al, 40);
      const auto wh = oracle::alpha_expand(x, mpq_class(1, 2), 40);
      if (!a.is_rational()) continue;
      const auto wa = oracle::alpha_expand(x, a.rational().value(), 40);
      for (const MatchedStep& s : t.steps) {
        if (s.j <= wh.size()) CHECK(s.half == Digit{wh[s.j - 1].a, wh[s.j - 1].eps});
        if (s.j <= wa.size()) CHECK(s.alpha == Digit{wa[s.j - 1].a, wa[s.j - 1].eps});
      }
    }
  }
}

TEST_CASE("q-difference classification on random surds") {
  std::mt19937_64 rng(47);
  std::size_t nonzero = 0;
  for (const ExactNumber& a : {q(13, 25), q(29, 50), golden_conjugate()}) {
    const Alpha al(a);
    for (int i = 0; i < 40; ++i) {
      const ExactNumber y = make_quadratic(std::uniform_int_distribution<long>(-9, 9)(rng), 1,
                                           std::uniform_int_distribution<long>(1, 9)(rng),
                                           std::uniform_int_distribution<long>(2, 60)(rng));
      if (!y.is_surd()) continue;
      const ExactNumber x = normalize(y, Alpha::half()).x;
      const QClassification c = q_difference_classify(matched_orbits(x, al, 40));
      CHECK(c.violations.empty());
      CHECK(c.max_log_gap <= std::log(2.0) + 1e-12);
      for (QClass k : c.classes) nonzero += k != QClass::Zero;
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("ordering chain fails at a zero-difference step") {
  const QClassification c = q_difference_classify(matched_orbits(q(39, 100), Alpha(q(3, 5)), 10));
  CHECK(c.violations.empty());
  REQUIRE(c.classes.size() >= 2);
  CHECK(c.classes[1] == QClass::Zero);
}

TEST_CASE("step json") {
  const MatchedTrace t = matched_orbits(q(2, 5), Alpha::half(), 5);
  const auto j = to_json(t.steps.front());
  CHECK(j["j"] == 1);
  CHECK(j["event"] == "coincide");
}
