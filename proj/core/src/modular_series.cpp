#include "alphacf/modular_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "alphacf/cf_core.hpp"
#include "alphacf/series_eval.hpp"

namespace alphacf {

namespace {

void require_even_k(int k) {
  if (k < 2 || k % 2 != 0) fail(Errc::InvalidArgument, "F_k needs an even k >= 2, got " + std::to_string(k));
}

// sin(2 pi r) for r in [0, 1), folded onto [0, 1/4] so that r and 1 - r give
// exactly opposite values and multiples of 1/4 are exact.
long double sin2pi(const Rational& r) {
  const Rational half(1, 2), quarter(1, 4);
  if (r > half) return -sin2pi(Rational(1) - r);
  if (r > quarter) return sin2pi(half - r);
  if (r == Rational(0)) return 0.0L;
  if (r == quarter) return 1.0L;
  const long double v = approx(ExactNumber(r), 80).to_long_double();
  return std::sin(2 * std::numbers::pi_v<long double> * v);
}

long double sin2pi(long double r) {
  if (r > 0.5L) return -sin2pi(1.0L - r);
  if (r > 0.25L) return sin2pi(0.5L - r);
  return std::sin(2 * std::numbers::pi_v<long double> * r);
}

// sigma_{k-1}(n)/n^{k+1} = sigma_{-(k-1)}(n)/n^2, accumulated by a sieve.
std::vector<long double> coefficients(int k, std::size_t n_terms) {
  std::vector<long double> c(n_terms + 1, 0.0L);
  for (std::size_t m = 1; m <= n_terms; ++m) {
    const long double w = std::pow(static_cast<long double>(m), -(k - 1));
    for (std::size_t n = m; n <= n_terms; n += m) c[n] += w;
  }
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const long double nn = static_cast<long double>(n);
    c[n] /= nn * nn;
  }
  return c;
}

}  // namespace

SigmaTable::SigmaTable(std::size_t limit, unsigned exponent) : exponent_(exponent), values_(limit + 1, BigInt(0)) {
  BigInt power;
  for (std::size_t d = 1; d <= limit; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), d, exponent);
    for (std::size_t n = d; n <= limit; n += d) values_[n] += power;
  }
}

const BigInt& SigmaTable::at(std::size_t n) const {
  if (n < 1 || n > limit()) {
    fail(Errc::InvalidArgument, "sigma table covers 1.." + std::to_string(limit()) + ", asked for " + std::to_string(n));
  }
  return values_[n];
}

BigInt divisor_sigma(std::uint64_t n, unsigned exponent) {
  if (n < 1) fail(Errc::InvalidArgument, "divisor_sigma needs n >= 1");
  BigInt result = 1;
  auto factor = [&](std::uint64_t p, unsigned mult) {
    // 1 + p^e + p^{2e} + ... + p^{mult e}
    BigInt term = 1, pe, sum = 1;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, exponent);
    for (unsigned i = 0; i < mult; ++i) {
      term *= pe;
      sum += term;
    }
    result *= sum;
  };
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    if (mult > 0) factor(p, mult);
  }
  if (n > 1) factor(n, 1);
  return result;
}

FourierPartial fourier_Fk_partial(const ExactNumber& x, int k, std::size_t n_terms) {
  require_even_k(k);
  const std::vector<long double> c = coefficients(k, n_terms);
  FourierPartial out;
  out.k = k;
  out.terms = n_terms;
  long double abs_sum = 0;
  if (x.is_rational()) {
    const BigInt p = x.rational().num();
    const BigInt q = x.rational().den();
    BigInt np;
    for (std::size_t n = 1; n <= n_terms; ++n) {
      np = p * static_cast<unsigned long>(n);
      mpz_fdiv_r(np.get_mpz_t(), np.get_mpz_t(), q.get_mpz_t());
      out.value += c[n] * sin2pi(Rational(np, q));
      abs_sum += c[n];
    }
  } else {
    const Real xr = approx(x, 160);
    for (std::size_t n = 1; n <= n_terms; ++n) {
      Real nx = xr * Real::from_int(static_cast<long>(n), 160);
      mpfr_frac(nx.get(), nx.get(), MPFR_RNDN);
      long double r = nx.to_long_double();
      if (r < 0) r += 1.0L;
      out.value += c[n] * sin2pi(r);
      abs_sum += c[n];
    }
  }
  const long double total = std::riemann_zeta(2.0L) * std::riemann_zeta(static_cast<long double>(k + 1));
  const long double slack = 64 * std::numeric_limits<long double>::epsilon() * total;
  out.tail_bound = std::max(0.0L, total - abs_sum) + slack;
  return out;
}

Real kbrjuno_condition_partial(const ExactNumber& x, int k, std::size_t n_terms, Precision prec) {
  return proxy_sum(x, Alpha::one(), k, n_terms, false, prec);
}

}  // namespace alphacf
