#include "alphacf/bmo_lab.hpp"

#include <algorithm>
#include <cmath>

namespace alphacf {

namespace {

const long double kGaussOffset = 0.5L / std::sqrt(3.0L);

long double to_ld(const Rational& r) { return approx(ExactNumber(r), 96).to_long_double(); }

// Node values and weights (weights sum to 1) of one mesh on one interval.
struct Sampled {
  std::vector<long double> values;
  std::vector<long double> weights;

  long double mean() const {
    long double s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * values[i];
    return s;
  }
  long double oscillation(long double about) const {
    long double s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * std::fabs(values[i] - about);
    return s;
  }
};

// Each half of [a, b] is cut into geometric panels toward its outer endpoint,
// each panel into `cells` two-point Gauss cells. Offsets are measured from the
// nearer endpoint so points close to a or b keep full relative accuracy.
Sampled sample_graded(const Evaluator& f, long double a, long double b, int levels, std::size_t cells) {
  Sampled s;
  const long double half = (b - a) / 2;
  const std::size_t per_side = static_cast<std::size_t>(levels + 1) * cells * 2;
  s.values.reserve(2 * per_side);
  s.weights.reserve(2 * per_side);
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i <= levels; ++i) {
      const long double hi = std::ldexp(half, -i);
      const long double lo = i == levels ? 0.0L : std::ldexp(half, -(i + 1));
      const long double h = (hi - lo) / static_cast<long double>(cells);
      for (std::size_t c = 0; c < cells; ++c) {
        const long double centre = lo + h * (static_cast<long double>(c) + 0.5L);
        for (const long double off : {centre - h * kGaussOffset, centre + h * kGaussOffset}) {
          const long double x = side == 0 ? a + off : b - off;
          const long double v = f(x);
          if (!std::isfinite(v)) {
            fail(Errc::QuadratureFailure, "integrand is not finite at x = " + std::to_string(static_cast<double>(x)));
          }
          s.values.push_back(v);
          s.weights.push_back(h / (2 * (b - a)));
        }
      }
    }
  }
  return s;
}

struct MeshPair {
  Sampled fine;
  Sampled coarse;
};

MeshPair sample_pair(const Evaluator& f, long double a, long double b, const QuadratureOptions& opts) {
  if (opts.n_samples < 2) fail(Errc::InvalidArgument, "quadrature needs n_samples >= 2");
  if (opts.levels < 0) fail(Errc::InvalidArgument, "quadrature levels must be >= 0");
  const std::size_t per_cell_group = 4 * static_cast<std::size_t>(opts.levels + 1);
  const std::size_t cells = std::max<std::size_t>(2, (opts.n_samples + per_cell_group - 1) / per_cell_group);
  return {sample_graded(f, a, b, opts.levels, cells), sample_graded(f, a, b, opts.levels, cells / 2)};
}

void check_stable(long double value, long double err, const QuadratureOptions& opts, const RationalInterval& I) {
  if (!std::isfinite(value) || !std::isfinite(err) ||
      err > opts.max_rel_error * std::max(1.0L, std::fabs(value))) {
    fail(Errc::QuadratureFailure, "mesh refinement on " + I.to_string() + " did not stabilize (value " +
                                      std::to_string(static_cast<double>(value)) + ", change " +
                                      std::to_string(static_cast<double>(err)) + ")");
  }
}

}  // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
  if (!(a < b)) fail(Errc::DegenerateInterval, "interval needs a < b, got [" + a.to_string() + ", " + b.to_string() + "]");
}

std::string RationalInterval::to_string() const { return "[" + a.to_string() + ", " + b.to_string() + "]"; }

IntervalStats interval_mean(const Evaluator& f, const RationalInterval& I, const QuadratureOptions& opts) {
  const MeshPair m = sample_pair(f, to_ld(I.a), to_ld(I.b), opts);
  const long double mean = m.fine.mean();
  const long double err = std::fabs(mean - m.coarse.mean());
  check_stable(mean, err, opts, I);
  return {I, mean, 0, m.fine.values.size(), err};
}

IntervalStats mean_oscillation(const Evaluator& f, const RationalInterval& I, const QuadratureOptions& opts) {
  const MeshPair m = sample_pair(f, to_ld(I.a), to_ld(I.b), opts);
  const long double mean = m.fine.mean();
  const long double coarse_mean = m.coarse.mean();
  const long double osc = m.fine.oscillation(mean);
  const long double err = std::max(std::fabs(mean - coarse_mean), std::fabs(osc - m.coarse.oscillation(coarse_mean)));
  check_stable(mean, err, opts, I);
  return {I, mean, osc, m.fine.values.size(), err};
}

long double concat_oscillation(long double o1, long double o2, long double m1, long double m2, long double len1,
                               long double len2) {
  if (!(len1 > 0) || !(len2 > 0)) fail(Errc::DegenerateInterval, "concatenated intervals need positive lengths");
  if (o1 < 0 || o2 < 0) fail(Errc::InvalidArgument, "oscillations must be nonnegative");
  const long double len = len1 + len2;
  return (len1 * o1 + len2 * o2) / len + 2 * len1 * len2 * std::fabs(m1 - m2) / (len * len);
}

long double concat_oscillation_lower_bound(long double m1, long double m2, long double len1, long double len2) {
  if (!(len1 > 0) || !(len2 > 0)) fail(Errc::DegenerateInterval, "concatenated intervals need positive lengths");
  const long double len = len1 + len2;
  return 2 * len1 * len2 * std::fabs(m1 - m2) / (len * len);
}

ScanResult bmo_seminorm_scan(const Evaluator& f, const RationalInterval& U, int depth, std::size_t n_samples) {
  if (depth < 0 || depth > 24) fail(Errc::InvalidArgument, "scan depth must lie in [0, 24]");
  const std::size_t cells = std::max<std::size_t>(1, n_samples / 2);
  const std::size_t per_leaf = 2 * cells;
  const std::size_t leaves = std::size_t(1) << depth;
  const long double a = to_ld(U.a);
  const long double width = to_ld(U.length()) / static_cast<long double>(leaves);

  std::vector<long double> vals(leaves * per_leaf);
  std::vector<long double> means(leaves);
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    long double sum = 0;
    for (std::size_t c = 0; c < cells; ++c) {
      const long double centre = (static_cast<long double>(c) + 0.5L) / static_cast<long double>(cells);
      const long double h = 1.0L / static_cast<long double>(cells);
      for (int s = 0; s < 2; ++s) {
        const long double u = centre + (s == 0 ? -h : h) * kGaussOffset;
        const long double x = a + width * (static_cast<long double>(leaf) + u);
        const long double v = f(x);
        if (!std::isfinite(v)) {
          fail(Errc::QuadratureFailure, "integrand is not finite at x = " + std::to_string(static_cast<double>(x)));
        }
        vals[leaf * per_leaf + 2 * c + s] = v;
        sum += v;
      }
    }
    means[leaf] = sum / static_cast<long double>(per_leaf);
  }

  ScanResult out{0, U, std::vector<long double>(static_cast<std::size_t>(depth) + 1, 0), leaves, vals.size()};
  int best_level = 0;
  std::size_t best_index = 0;
  for (int level = depth; level >= 0; --level) {
    const std::size_t count = std::size_t(1) << level;
    const std::size_t span = leaves / count;
    if (level < depth) {
      for (std::size_t t = 0; t < count; ++t) means[t] = (means[2 * t] + means[2 * t + 1]) / 2;
    }
    for (std::size_t t = 0; t < count; ++t) {
      long double osc = 0;
      const std::size_t begin = t * span * per_leaf;
      const std::size_t end = begin + span * per_leaf;
      for (std::size_t i = begin; i < end; ++i) osc += std::fabs(vals[i] - means[t]);
      osc /= static_cast<long double>(end - begin);
      long double& level_sup = out.level_sup[static_cast<std::size_t>(level)];
      level_sup = std::max(level_sup, osc);
      if (osc > out.sup_estimate) {
        out.sup_estimate = osc;
        best_level = level;
        best_index = t;
      }
    }
  }
  const Rational step = U.length() * Rational(BigInt(1), BigInt(1) << best_level);
  const Rational lo = U.a + step * Rational(static_cast<long>(best_index));
  out.argmax = RationalInterval(lo, lo + step);
  return out;
}

BlowupExperiment wilton_blowup_experiment(const std::vector<long>& n_list, const QuadratureOptions& opts,
                                          long double cutoff, int max_terms) {
  const FastSeries w(1.0L, SeriesMode::wilton(), cutoff, max_terms);
  const Evaluator f = [&w](long double x) { return w(x); };
  BlowupExperiment out{{}, cutoff, max_terms};
  for (const long n : n_list) {
    if (n < 2) fail(Errc::InvalidArgument, "blow-up intervals need n >= 2, got " + std::to_string(n));
    const RationalInterval plus(Rational(0), Rational(1, n));
    const RationalInterval minus(Rational(-1, n), Rational(0));
    const long double len = 1.0L / static_cast<long double>(n);
    const MeshPair p = sample_pair(f, 0.0L, len, opts);
    const MeshPair m = sample_pair(f, -len, 0.0L, opts);

    BlowupRow row;
    row.n = n;
    row.mean_plus = p.fine.mean();
    row.mean_minus = m.fine.mean();
    const long double whole = (row.mean_plus + row.mean_minus) / 2;
    row.oscillation = (p.fine.oscillation(whole) + m.fine.oscillation(whole)) / 2;

    const long double cp = p.coarse.mean();
    const long double cm = m.coarse.mean();
    const long double cwhole = (cp + cm) / 2;
    const long double cosc = (p.coarse.oscillation(cwhole) + m.coarse.oscillation(cwhole)) / 2;
    row.quad_error = std::max({std::fabs(row.mean_plus - cp), std::fabs(row.mean_minus - cm),
                               std::fabs(row.oscillation - cosc)});
    row.samples = p.fine.values.size() + m.fine.values.size();
    check_stable(row.mean_plus, std::fabs(row.mean_plus - cp), opts, plus);
    check_stable(row.mean_minus, std::fabs(row.mean_minus - cm), opts, minus);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace alphacf
