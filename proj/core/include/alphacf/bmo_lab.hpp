#pragma once

// Interval means and mean oscillations
//   f_I = (1/|I|) int_I f,   O_I(f) = (1/|I|) int_I |f - f_I|
// for integrands with integrable log singularities, dyadic BMO scans, and the
// Wilton blow-up experiment on I_n = [-1/n, 1/n].

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alphacf/numkit.hpp"
#include "alphacf/series_eval.hpp"

namespace alphacf {

using Evaluator = std::function<long double(long double)>;

struct RationalInterval {
  Rational a;
  Rational b;

  // Requires a < b (DegenerateInterval).
  RationalInterval(Rational lo, Rational hi);
  Rational length() const { return b - a; }
  Rational midpoint() const { return (a + b) / Rational(2); }
  std::string to_string() const;  // "[a, b]"

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

struct IntervalStats {
  RationalInterval interval;
  long double mean = 0;
  long double oscillation = 0;
  std::size_t samples = 0;
  long double quad_error = 0;
};

struct QuadratureOptions {
  std::size_t n_samples = 100000;
  // Geometric panels toward each endpoint; panel i of a half covers
  // [2^-(i+1), 2^-i] of that half.
  int levels = 24;
  // Refinement must agree to this relative tolerance (QuadratureFailure).
  long double max_rel_error = 0.05L;
};

// Graded-mesh two-point Gauss-Legendre rule. quad_error is the difference to
// the same mesh with half the cells per panel.
IntervalStats interval_mean(const Evaluator& f, const RationalInterval& I, const QuadratureOptions& opts = {});
IntervalStats mean_oscillation(const Evaluator& f, const RationalInterval& I, const QuadratureOptions& opts = {});

// (|I1| O1 + |I2| O2)/|I| + 2 |I1||I2| |m1 - m2| / |I|^2. This is an upper
// bound for the oscillation of the union; equality needs f - f_I to keep one
// sign on each half. DegenerateInterval for nonpositive lengths.
long double concat_oscillation(long double o1, long double o2, long double m1, long double m2, long double len1,
                               long double len2);
// 2 |I1||I2| |m1 - m2| / |I|^2 <= O_{I1 u I2}; |m1 - m2|/2 for equal lengths.
long double concat_oscillation_lower_bound(long double m1, long double m2, long double len1, long double len2);

struct ScanResult {
  long double sup_estimate = 0;
  RationalInterval argmax{Rational(0), Rational(1)};
  std::vector<long double> level_sup;  // index = depth level
  std::size_t leaves = 0;
  std::size_t samples = 0;
};

// sup of O_J(f) over the dyadic subintervals J of U down to `depth`. Leaves
// are sampled with n_samples two-point cells; parent means are merged from
// children, parent oscillations are summed directly over the leaf samples.
ScanResult bmo_seminorm_scan(const Evaluator& f, const RationalInterval& U, int depth, std::size_t n_samples = 16);

struct BlowupRow {
  long n = 0;
  long double mean_plus = 0;    // W on [0, 1/n]
  long double mean_minus = 0;   // W on [-1/n, 0]
  long double oscillation = 0;  // O over [-1/n, 1/n]
  std::size_t samples = 0;
  long double quad_error = 0;
};

struct BlowupExperiment {
  std::vector<BlowupRow> rows;
  long double cutoff = 0;  // evaluator truncation: beta below cutoff
  int max_terms = 0;
};

BlowupExperiment wilton_blowup_experiment(const std::vector<long>& n_list, const QuadratureOptions& opts = {},
                                          long double cutoff = 1e-13L, int max_terms = 200);

}  // namespace alphacf
