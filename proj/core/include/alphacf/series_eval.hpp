#pragma once

// k-Brjuno and Wilton series over alpha-continued fractions.
//
//   B_{k,alpha}(x) = sum_{n>=0} beta_{n-1}^k log(1/x_n)
//   W_alpha(x)     = sum_{n>=0} (-1)^n beta_{n-1} log(1/x_n)
//
// with x_n the alpha-orbit of x and beta_n = x_0 x_1 ... x_n. Both satisfy
// S(x) = -log x + sigma x^k S(A_alpha x), sigma = +1 (Brjuno) or -1 (Wilton).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alphacf/cf_core.hpp"
#include "alphacf/numkit.hpp"
#include "alphacf/real.hpp"

namespace alphacf {

enum class SeriesKind { Brjuno, Wilton };

struct SeriesMode {
  SeriesKind kind = SeriesKind::Brjuno;
  int k = 1;  // always 1 for Wilton

  static SeriesMode brjuno(int k);
  static SeriesMode wilton() { return {SeriesKind::Wilton, 1}; }
  // +1 for Brjuno, -1 for Wilton.
  int sigma() const noexcept { return kind == SeriesKind::Brjuno ? 1 : -1; }
  std::string to_string() const;  // "brjuno(2)", "wilton"

  friend bool operator==(const SeriesMode&, const SeriesMode&) = default;
};

struct SeriesOptions {
  std::size_t terms = 10000;
  double tol = 1e-30;
  Precision precision = kDefaultPrecision;
};

struct SeriesValue {
  Real value;
  std::size_t n_terms = 0;
  Real tail_estimate;
  bool rigorous_tail = false;
  SeriesMode mode;
};

// x must lie in (0, alpha]. Periodic surds are summed in closed form;
// Float and long-period inputs are summed until beta_{n-1}^k < tol.
// Rational x raises DivergesAtRational, x = 0 raises SingularPoint.
SeriesValue evaluate_series(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, const SeriesOptions& opts = {});
SeriesValue brjuno_k(const ExactNumber& x, const Alpha& alpha, int k, const SeriesOptions& opts = {});
SeriesValue wilton(const ExactNumber& x, const Alpha& alpha, const SeriesOptions& opts = {});

// Any real y: reduced with normalize() first (periodic, even completion).
SeriesValue evaluate_completed(const ExactNumber& y, const Alpha& alpha, SeriesMode mode,
                               const SeriesOptions& opts = {});

// First n terms exactly, no tolerance cut. DivergesAtRational if the orbit
// reaches 0 first, PrecisionExhausted if a Float orbit loses its branch.
Real partial_sum(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, std::size_t n,
                 Precision prec = kDefaultPrecision);

// Gauss-map truncations at rationals: sum over j = 0..r-1 of the expansion of
// x - floor(x). Integers give 0.
Real brjuno_finite_rational(const Rational& x, int k, Precision prec = kDefaultPrecision);
Real wilton_finite_rational(const Rational& x, Precision prec = kDefaultPrecision);

// sum_{j<n} (+-1)^j log(q_{j+1}) / q_j^k over the alpha-denominators of x.
// Needs n digits (ExpansionTooShort otherwise).
Real proxy_sum(const ExactNumber& x, const Alpha& alpha, int k, std::size_t n, bool alternating,
               Precision prec = kDefaultPrecision);
// Same, from precomputed denominators q_0..q_n.
Real proxy_sum(const std::vector<BigInt>& q, int k, std::size_t n, bool alternating, Precision prec);

using RealFunction = std::function<Real(const ExactNumber&)>;

// sign * x^k * f(1/x), with 1/x reduced by normalize(). Requires 0 < x < alpha.
Real apply_transfer(const RealFunction& f, int k, const Alpha& alpha, const ExactNumber& x, int sign,
                    Precision prec = kDefaultPrecision);

// S_n(x) + log x - sigma x^k S_{n-1}(A_alpha x); zero up to rounding.
Real functional_eq_residual(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, std::size_t n,
                            Precision prec = kDefaultPrecision);

// C' = sum_{j>=0} g^j = (3 + sqrt(5))/2.
ExactNumber lemma_constant_cprime();

struct TruncationReport {
  ExactNumber x;
  std::size_t r = 0;
  SeriesMode mode;
  Real lhs;
  Real bound;
  bool pass = false;
};

// Gauss map only. lhs = |finite(p_r/q_r) - sum_{j<r} beta_{j-1}^k log(1/x_j)|,
// bound = 2 k C' x_r / q_r (k = 1 for Wilton).
TruncationReport truncation_bound_check(const ExactNumber& x, std::size_t r, SeriesMode mode,
                                        Precision prec = kDefaultPrecision);
// All r in [1, r_max] at once; stops early when a rational orbit terminates.
std::vector<TruncationReport> truncation_bound_scan(const ExactNumber& x, std::size_t r_max, SeriesMode mode,
                                                    Precision prec = kDefaultPrecision);

struct GapRow {
  std::string x;
  Real sup_gap;            // max over n <= N of |S_n - proxy_n|, alpha denominators
  std::size_t argmax_depth = 0;
  Real sup_gap_cross;      // same against the alpha = 1 denominators
};

struct GapAudit {
  Real sup_gap;
  Real sup_gap_cross;
  std::vector<GapRow> rows;
};

// Brjuno(k) compares with the plain proxy, Wilton with the alternating one.
GapAudit gap_audit(const std::vector<ExactNumber>& samples, const Alpha& alpha, SeriesMode mode, std::size_t depth,
                   Precision prec = kDefaultPrecision);

// 2 c2 + 2 (c1 + c2) + 2^{k+1} c1 with c1 = 2/e, c2 = 5 log 2.
double proof_constant_gap_bound(int k);

// Long double evaluator for dense sampling (quadrature, scans). Any real y
// is completed by periodicity and evenness; terms stop once beta^k drops
// below `cutoff`. Returns +inf at points whose orbit hits 0.
class FastSeries {
 public:
  FastSeries(long double alpha, SeriesMode mode, long double cutoff = 1e-13L, int max_terms = 200);
  long double operator()(long double y) const;
  const SeriesMode& mode() const noexcept { return mode_; }
  long double cutoff() const noexcept { return cutoff_; }
  int max_terms() const noexcept { return max_terms_; }

 private:
  long double alpha_;
  SeriesMode mode_;
  long double cutoff_;
  int max_terms_;
};

}  // namespace alphacf
