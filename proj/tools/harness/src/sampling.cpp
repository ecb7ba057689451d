#include "alphacf/harness/sampling.hpp"

namespace alphacf::harness {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

BigInt random_bits(Rng& rng, Precision bits) {
  BigInt out = 0;
  for (Precision done = 0; done < bits; done += 64) {
    out <<= 64;
    out += BigInt(std::to_string(rng()));
  }
  return out >> static_cast<mp_bitcnt_t>((bits + 63) / 64 * 64 - bits);
}

}  // namespace

ExactNumber random_surd(Rng& rng, const Alpha& alpha) {
  while (true) {
    long d = uniform(rng, 2, 60);
    const long b = uniform(rng, 1, 12) * (uniform(rng, 0, 1) == 0 ? 1 : -1);
    const ExactNumber y = make_quadratic(uniform(rng, -40, 40), b, uniform(rng, 1, 40), d);
    if (!y.is_surd()) continue;
    const Normalized n = normalize(y, alpha);
    if (!n.x.is_zero()) return n.x;
  }
}

ExactNumber random_float(Rng& rng, const Alpha& alpha, Precision prec) {
  const Real a = approx(alpha.value(), prec);
  while (true) {
    BigInt m = random_bits(rng, prec);
    if (m == 0) continue;
    Real u(prec);
    mpfr_set_z_2exp(u.get(), m.get_mpz_t(), -static_cast<long>(prec), MPFR_RNDN);
    Real x(prec);
    mpfr_mul(x.get(), u.get(), a.get(), MPFR_RNDD);
    if (x.sign() <= 0) continue;
    const ExactNumber out = Float::point(x);
    if (compare(out, alpha.value()) < 0) return out;
  }
}

ExactNumber random_rational_half(Rng& rng) {
  const BigInt q = BigInt(std::to_string(rng() >> 1)) + 1;
  BigInt p = BigInt(std::to_string(rng() >> 1));
  p %= q / 2 + 1;
  return Rational(p, q);
}

}  // namespace alphacf::harness
