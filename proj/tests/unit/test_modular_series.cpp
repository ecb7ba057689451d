#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alphacf/modular_series.hpp"
#include "oracles.hpp"
#include "alphacf/series_eval.hpp"

using namespace alphacf;

namespace {

ExactNumber q(long p, long d) { return Rational(p, d); }

long double brute_Fk(long double x, int k, std::size_t n) {
  long double s = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    const long double sig = static_cast<long double>(oracle::sigma_brute(m, static_cast<unsigned>(k - 1)));
    s += sig / std::pow(static_cast<long double>(m), k + 1) * std::sin(2 * std::numbers::pi_v<long double> * m * x);
  }
  return s;
}

}  // namespace

TEST_CASE("divisor sigma small values") {
  CHECK(divisor_sigma(1, 1) == 1);
  CHECK(divisor_sigma(6, 1) == 12);
  CHECK(divisor_sigma(12, 0) == 6);
  CHECK(divisor_sigma(2, 3) == 9);
  CHECK(divisor_sigma(97, 5) == BigInt("8587340258"));
  CHECK_THROWS_AS(divisor_sigma(0, 1), Error);
}

TEST_CASE("sieve agrees with trial factorization") {
  for (unsigned e : {0U, 1U, 3U, 5U}) {
    const SigmaTable t(2000, e);
    CHECK(t.limit() == 2000);
    CHECK(t.exponent() == e);
    for (std::size_t n = 1; n <= 2000; n += 7) CHECK(t.at(n) == divisor_sigma(n, e));
    CHECK_THROWS_AS(t.at(0), Error);
    CHECK_THROWS_AS(t.at(2001), Error);
  }
}

TEST_CASE("sigma is multiplicative") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::uint64_t> u(1, 3000);
  int tested = 0;
  while (tested < 100) {
    const std::uint64_t m = u(rng), n = u(rng);
    if (std::gcd(m, n) != 1) continue;
    CHECK(divisor_sigma(m * n, 3) == divisor_sigma(m, 3) * divisor_sigma(n, 3));
    ++tested;
  }
}

TEST_CASE("F_k partial sums") {
  for (int k : {2, 4}) {
    CHECK(fourier_Fk_partial(q(0, 1), k, 500).value == 0);
    CHECK(fourier_Fk_partial(q(1, 2), k, 500).value == 0);
    CHECK(fourier_Fk_partial(q(3, 2), k, 500).value == 0);
    for (const ExactNumber& x : {q(1, 7), q(2, 5), q(9, 31)}) {
      const FourierPartial f = fourier_Fk_partial(x, k, 300);
      CHECK(fourier_Fk_partial(ExactNumber(1) - x, k, 300).value == -f.value);
      const long double want = brute_Fk(approx(x, 64).to_long_double(), k, 300);
      CHECK(std::fabs(f.value - want) < 1e-15L);
    }
  }
  const FourierPartial a = fourier_Fk_partial(golden_conjugate(), 2, 100);
  const FourierPartial b = fourier_Fk_partial(golden_conjugate(), 2, 1000);
  CHECK(b.tail_bound < a.tail_bound);
  CHECK(std::fabs(a.value - b.value) <= a.tail_bound);
  CHECK_THROWS_AS(fourier_Fk_partial(q(1, 3), 3, 10), Error);
  CHECK_THROWS_AS(fourier_Fk_partial(q(1, 3), 0, 10), Error);
}

TEST_CASE("k-Brjuno condition partial sums") {
  const Real l2 = log(Real::from_int(2)), l3 = log(Real::from_int(3));
  // Gauss denominators of g are the Fibonacci numbers 1, 1, 2, 3, ...
  const Real want = l2 + l3 / Real::from_int(4);
  CHECK(abs(kbrjuno_condition_partial(golden_conjugate(), 2, 2) - l2) < Real::from_string("1e-60"));
  CHECK(abs(kbrjuno_condition_partial(golden_conjugate(), 2, 3) - want) < Real::from_string("1e-60"));
  CHECK(kbrjuno_condition_partial(golden_conjugate(), 2, 30) ==
        proxy_sum(golden_conjugate(), Alpha::one(), 2, 30, false));
}
