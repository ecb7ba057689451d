#include <doctest.h>

#include <random>

#include "alphacf/cf_core.hpp"
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

TEST_CASE("alpha_step worked examples") {
  const StepResult a = alpha_step(q(2, 5), Alpha::half());
  CHECK(a.digit == Digit{3, -1});
  CHECK(a.next == q(1, 2));
  const StepResult b = alpha_step(q(2, 5), Alpha::one());
  CHECK(b.digit == Digit{2, 1});
  CHECK(b.next == q(1, 2));
  const StepResult c = alpha_step(q(1, 3), Alpha::one());
  CHECK(c.digit == Digit{3, 1});
  CHECK(c.terminal);
  CHECK(c.next.is_zero());
}

TEST_CASE("alpha_step domain") {
  CHECK(code_of([] { alpha_step(q(3, 4), Alpha::half()); }) == Errc::OutOfDomain);
  CHECK(code_of([] { alpha_step(q(0, 1), Alpha::one()); }) == Errc::OutOfDomain);
  CHECK(code_of([] { Alpha(q(2, 5)); }) == Errc::OutOfDomain);
}

TEST_CASE("expand worked examples") {
  const CFExpansion g = expand(golden_conjugate(), Alpha::one(), 50);
  REQUIRE(g.period.has_value());
  CHECK(*g.period == Period{0, 1});
  CHECK(g.digits.front() == Digit{1, 1});

  const CFExpansion e = expand(q(2, 5), Alpha::half(), 50);
  CHECK(e.terminated);
  CHECK(e.digits == std::vector<Digit>{{3, -1}, {2, 1}});

  const CFExpansion f = expand(q(5, 13), Alpha::half(), 50);
  CHECK(f.digits == std::vector<Digit>{{3, -1}, {3, -1}, {2, 1}});
}

TEST_CASE("expand matches the textbook rule on random rationals") {
  std::mt19937_64 rng(3);
  const std::vector<Rational> alphas = {Rational(1, 2), Rational(3, 5), Rational(7, 10), Rational(1)};
  for (int i = 0; i < 400; ++i) {
    const Rational& a = alphas[i % alphas.size()];
    const long den = std::uniform_int_distribution<long>(2, 100000)(rng);
    mpq_class x(std::uniform_int_distribution<long>(1, den)(rng), den);
    x.canonicalize();
    if (x > a.value()) x = a.value() * x;  // rescale into (0, alpha]
    x.canonicalize();
    const auto want = oracle::alpha_expand(x, a.value(), 200);
    const CFExpansion got = expand(Rational(x), Alpha(a), 200);
    REQUIRE(got.digits.size() == want.size());
    for (std::size_t j = 0; j < want.size(); ++j) {
      CHECK(got.digits[j].a == want[j].a);
      CHECK(got.digits[j].eps == want[j].eps);
    }
    CHECK(got.terminated);
  }
}

TEST_CASE("periodic surd expansions repeat their period") {
  const ExactNumber s = make_quadratic(-1, 1, 1, 7);  // sqrt(7) - 1, reduced below
  const Alpha a(q(3, 5));
  const Normalized n = normalize(s, a);
  const CFExpansion e = expand(n.x, a, 200);
  REQUIRE(e.period.has_value());
  const CFExpansion u = unrolled(e, 60);
  REQUIRE(u.length() >= 60);
  const std::size_t pre = e.period->preperiod, len = e.period->length;
  for (std::size_t j = pre; j + len < u.length(); ++j) CHECK(u.digits[j] == u.digits[j + len]);
}

TEST_CASE("convergents worked examples") {
  const ConvergentSeq c = convergents(expand(q(2, 5), Alpha::half(), 10));
  CHECK(c.q_at(0) == 1);
  CHECK(c.q_at(1) == 3);
  CHECK(c.q_at(2) == 5);
  CHECK(c.p_at(0) == 0);
  CHECK(c.p_at(1) == 1);
  CHECK(c.p_at(2) == 2);

  const ConvergentSeq f = convergents(unrolled(expand(golden_conjugate(), Alpha::one(), 5), 20));
  mpz_class a = 1, b = 1;
  for (long j = 0; j <= 20; ++j) {
    CHECK(f.q_at(j) == a);
    const mpz_class n = a + b;
    a = b;
    b = n;
  }
  const ConvergentSeq t = convergents(expand(q(1, 3), Alpha::one(), 5));
  CHECK(t.q_at(1) == 3);
  CHECK(t.p_at(1) == 1);
}

TEST_CASE("convergent invariants: determinant, beta = |q x - p|, beta product") {
  std::mt19937_64 rng(5);
  const std::vector<Alpha> alphas = {Alpha::half(), Alpha(q(3, 5)), Alpha::golden(), Alpha::one()};
  for (int i = 0; i < 80; ++i) {
    const Alpha& a = alphas[i % alphas.size()];
    const ExactNumber y = make_quadratic(std::uniform_int_distribution<long>(-20, 20)(rng),
                                         std::uniform_int_distribution<long>(1, 9)(rng),
                                         std::uniform_int_distribution<long>(1, 20)(rng),
                                         std::uniform_int_distribution<long>(2, 50)(rng));
    if (!y.is_surd()) continue;
    const ExactNumber x = normalize(y, a).x;
    const CFExpansion e = unrolled(expand(x, a, 40), 25);
    const ConvergentSeq c = convergents(e);
    const auto betas = beta_products(e, 24);
    for (long j = 0; j <= 24; ++j) {
      const mpz_class det = c.p_at(j) * c.q_at(j - 1) - c.p_at(j - 1) * c.q_at(j);
      CHECK(abs(det) == 1);
      CHECK(c.q_at(j) > 0);
      CHECK(c.beta_at(j) == abs(ExactNumber(Rational(c.q_at(j), 1)) * x - ExactNumber(Rational(c.p_at(j), 1))));
      CHECK(betas[static_cast<std::size_t>(j + 1)] == c.beta_at(j));
    }
  }
}

TEST_CASE("beta_products worked examples") {
  const CFExpansion g = unrolled(expand(golden_conjugate(), Alpha::one(), 5), 10);
  const auto b = beta_products(g, 5);
  CHECK(b[0] == ExactNumber(1));
  ExactNumber gp = 1;
  for (std::size_t j = 0; j <= 5; ++j) {
    gp = gp * golden_conjugate();
    CHECK(b[j + 1] == gp);
  }
  const CFExpansion e = expand(q(2, 5), Alpha::one(), 5);
  CHECK(beta_products(e, 1)[2] == q(1, 5));
  CHECK(code_of([&] { beta_products(e, 5); }) == Errc::ExpansionTooShort);
}

TEST_CASE("normalize worked examples") {
  const Alpha a(q(3, 5));
  Normalized n = normalize(q(139, 100), a);
  CHECK(n.x == q(39, 100));
  CHECK_FALSE(n.reflected);
  n = normalize(q(3, 4), a);
  CHECK(n.x == q(1, 4));
  CHECK(n.reflected);
  n = normalize(-golden_conjugate(), Alpha::one());
  CHECK(n.x == ExactNumber(1) - golden_conjugate());
  CHECK_FALSE(n.reflected);
  n = normalize(q(17, 10), a);  // 0.7 reflects to 0.3
  CHECK(n.x == q(3, 10));
  CHECK(n.reflected);
}

TEST_CASE("Float orbits follow the exact orbit until the branch is lost") {
  const ExactNumber s = make_quadratic(-1, 1, 1, 2);
  const ExactNumber f = Float::enclose(s.surd(), 256);
  const CFExpansion ef = expand(f, Alpha::one(), 500, OnAmbiguity::Truncate);
  const CFExpansion es = unrolled(expand(s, Alpha::one(), 10), ef.length());
  CHECK(ef.precision_exhausted);
  CHECK(ef.length() > 50);
  for (std::size_t j = 0; j < ef.length(); ++j) CHECK(ef.digits[j] == es.digits[j]);
  CHECK(code_of([&] { expand(f, Alpha::one(), 500); }) == Errc::PrecisionExhausted);
}

TEST_CASE("to_json schema") {
  const auto j = to_json(expand(q(2, 5), Alpha::half(), 10));
  CHECK(j["digits"] == nlohmann::ordered_json::parse("[[3,-1],[2,1]]"));
  CHECK(j["terminated"] == true);
  CHECK(j["period"].is_null());
}
