#pragma once

// Divisor sums sigma_e(n) = sum_{d | n} d^e and partial sums of
//   F_k(x) = sum_{n>=1} sigma_{k-1}(n) n^{-(k+1)} sin(2 pi n x),  k even.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alphacf/numkit.hpp"
#include "alphacf/real.hpp"

namespace alphacf {

class SigmaTable {
 public:
  // sigma_e(n) for 1 <= n <= limit by a divisor sieve.
  SigmaTable(std::size_t limit, unsigned exponent);

  std::size_t limit() const noexcept { return values_.size() - 1; }
  unsigned exponent() const noexcept { return exponent_; }
  // Requires 1 <= n <= limit (InvalidArgument).
  const BigInt& at(std::size_t n) const;

 private:
  unsigned exponent_;
  std::vector<BigInt> values_;  // index 0 unused
};

// Single query by trial factorization. Requires n >= 1.
BigInt divisor_sigma(std::uint64_t n, unsigned exponent);

struct FourierPartial {
  long double value = 0;
  long double tail_bound = 0;  // sum_{n>N} sigma_{k-1}(n)/n^{k+1}
  std::size_t terms = 0;
  int k = 2;
};

// Partial sum to n = N in long double. Rational x reduces n x mod 1 exactly,
// so F_k vanishes exactly at multiples of 1/2 and F_k(1 - x) = -F_k(x)
// bitwise. Requires k even, k >= 2.
FourierPartial fourier_Fk_partial(const ExactNumber& x, int k, std::size_t n_terms);

// sum_{n<N} log(q_{n+1}) / q_n^k over the Gauss denominators of x.
Real kbrjuno_condition_partial(const ExactNumber& x, int k, std::size_t n_terms, Precision prec = kDefaultPrecision);

}  // namespace alphacf
