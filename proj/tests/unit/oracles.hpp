#pragma once

// Reference computations used only by the tests. They share no code with the
// library: plain mpq arithmetic for expansions, long double sums for series.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

struct Digit {
  mpz_class a;
  int eps;
};

// alpha-expansion of a rational x in (0, alpha] by the textbook rule:
// a = floor(1/x + 1 - alpha), eps = sign(1/x - a), next = |1/x - a|.
inline std::vector<Digit> alpha_expand(mpq_class x, const mpq_class& alpha, std::size_t max_steps) {
  std::vector<Digit> out;
  while (x != 0 && out.size() < max_steps) {
    const mpq_class inv = 1 / x;
    mpq_class shifted = inv + 1 - alpha;
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    mpq_class r = inv - mpq_class(a);
    const int eps = r < 0 ? -1 : 1;
    out.push_back({a, eps});
    x = abs(r);
  }
  return out;
}

// Gauss-map Brjuno/Wilton partial sums in long double.
inline long double gauss_series(long double x, int k, bool alternating, int terms) {
  long double sum = 0, beta = 1;
  for (int n = 0; n < terms && x > 0; ++n) {
    const long double term = std::pow(beta, k) * -std::log(x);
    sum += alternating && n % 2 == 1 ? -term : term;
    beta *= x;
    const long double inv = 1 / x;
    x = inv - std::floor(inv);
  }
  return sum;
}

inline std::uint64_t sigma_brute(std::uint64_t n, unsigned e) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      std::uint64_t t = 1;
      for (unsigned i = 0; i < e; ++i) t *= d;
      s += t;
    }
  }
  return s;
}

}  // namespace oracle
