#include "alphacf/series_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alphacf {

namespace {

void require_k(int k) {
  if (k < 1) fail(Errc::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
}

void require_series_domain(const ExactNumber& x, const Alpha& alpha) {
  if (x.is_zero()) fail(Errc::SingularPoint, "series diverge at x = 0");
  if (x.sign() < 0 || compare(x, alpha.value()) > 0) {
    fail(Errc::OutOfDomain, "series argument must lie in (0, " + alpha.to_string() + "], got " + x.to_string());
  }
}

ExactNumber power(const ExactNumber& v, int k) {
  ExactNumber out = v;
  for (int i = 1; i < k; ++i) out = out * v;
  return out;
}

// beta^k log(1/x_j), both factors rounded once from their exact values.
Real orbit_term(const ExactNumber& beta, int k, const ExactNumber& xj, Precision prec) {
  return approx(power(beta, k), prec) * log(approx(reciprocal(xj), prec));
}

ExactNumber step_or_throw(const ExactNumber& cur, const Alpha& alpha, bool& terminal) {
  try {
    StepResult s = alpha_step(cur, alpha);
    terminal = s.terminal;
    return std::move(s.next);
  } catch (const Error& err) {
    const bool ambiguous = err.code() == Errc::AmbiguousFloor || err.code() == Errc::AmbiguousComparison;
    if (ambiguous && cur.is_float()) {
      fail(Errc::PrecisionExhausted, std::string("Float orbit lost branch resolution: ") + err.what());
    }
    throw;
  }
}

constexpr Precision kMaxEscalation = Precision(1) << 12;

ExactNumber at_precision(const ExactNumber& x, Precision p) {
  const Float& f = x.flt();
  Real lo(p), hi(p);
  mpfr_set(lo.get(), f.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), f.hi().get(), MPFR_RNDU);
  return Float(std::move(lo), std::move(hi));
}

// Runs fn(x, p). A point Float whose orbit loses branch resolution is
// re-enclosed at twice the precision and retried, up to kMaxEscalation bits.
template <class Fn>
auto with_escalation(const ExactNumber& x, Precision prec, Fn&& fn) {
  Precision p = working_precision(x, prec);
  ExactNumber cur = x;
  while (true) {
    try {
      return fn(cur, p);
    } catch (const Error& err) {
      const bool retry = err.code() == Errc::PrecisionExhausted && x.is_float() && x.flt().is_point() &&
                         p < kMaxEscalation;
      if (!retry) throw;
      p *= 2;
      cur = at_precision(x, p);
    }
  }
}

SeriesValue closed_form(const CFExpansion& e, SeriesMode mode, Precision prec) {
  const std::size_t pre = e.period->preperiod;
  const std::size_t len = e.period->length;
  Real head(prec), block(prec), beta = Real::from_int(1, prec), cycle = Real::from_int(1, prec);
  for (std::size_t n = 0; n < pre + len; ++n) {
    const Real xn = approx(e.orbit[n], prec);
    Real term = pow(beta, mode.k) * -log(xn);
    if (mode.sigma() < 0 && n % 2 == 1) term = -term;
    (n < pre ? head : block) += term;
    beta *= xn;
    if (n >= pre) cycle *= xn;
  }
  Real rho = pow(cycle, mode.k);
  if (mode.sigma() < 0 && len % 2 == 1) rho = -rho;
  SeriesValue out{head + block / (Real::from_int(1, prec) - rho), pre + len, Real(prec), true, mode};
  return out;
}

SeriesValue sum_until_tol(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, const SeriesOptions& opts,
                          Precision prec) {
  const Real tol = Real::from_long_double(opts.tol, prec);
  Real sum(prec), beta = Real::from_int(1, prec);
  std::vector<Real> mags;
  ExactNumber cur = x;
  std::size_t n = 0;
  while (n < opts.terms) {
    if (cur.is_zero()) fail(Errc::DivergesAtRational, "orbit of " + x.to_string() + " reaches 0");
    const Real xn = approx(cur, prec);
    Real term = pow(beta, mode.k) * -log(xn);
    if (mode.sigma() < 0 && n % 2 == 1) term = -term;
    sum += term;
    mags.push_back(abs(term));
    ++n;
    beta *= xn;
    if (pow(beta, mode.k) < tol) break;
    if (n < opts.terms) {
      bool terminal = false;
      cur = step_or_throw(cur, alpha, terminal);
    }
  }
  const Real g = approx(golden_conjugate(), prec);
  const Real gk = pow(g, mode.k);
  const Real geometric = gk / (Real::from_int(1, prec) - gk);
  Real tail(prec);
  if (!mags.empty()) {
    const Real& last = mags.back();
    bool decreasing = mags.size() >= 3;
    for (std::size_t i = mags.size() >= 3 ? mags.size() - 2 : 0; decreasing && i < mags.size(); ++i) {
      if (!(mags[i] <= mags[i - 1])) decreasing = false;
    }
    tail = (mode.kind == SeriesKind::Wilton && decreasing) ? last : last * geometric;
  }
  return SeriesValue{sum, n, tail, false, mode};
}

}  // namespace

SeriesMode SeriesMode::brjuno(int k) {
  require_k(k);
  return {SeriesKind::Brjuno, k};
}

std::string SeriesMode::to_string() const {
  return kind == SeriesKind::Wilton ? "wilton" : "brjuno(" + std::to_string(k) + ")";
}

SeriesValue evaluate_series(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, const SeriesOptions& opts) {
  require_k(mode.k);
  if (mode.kind == SeriesKind::Wilton) mode.k = 1;
  if (x.is_rational()) {
    if (x.is_zero()) fail(Errc::SingularPoint, "series diverge at x = 0");
    fail(Errc::DivergesAtRational, x.to_string() + " is rational; use the -finite variants");
  }
  require_series_domain(x, alpha);
  const Precision prec = working_precision(x, opts.precision);
  if (x.is_surd()) {
    const CFExpansion e = expand(x, alpha, opts.terms);
    if (e.period) return closed_form(e, mode, prec);
  }
  return with_escalation(x, prec, [&](const ExactNumber& xp, Precision p) {
    return sum_until_tol(xp, alpha, mode, opts, p);
  });
}

SeriesValue brjuno_k(const ExactNumber& x, const Alpha& alpha, int k, const SeriesOptions& opts) {
  return evaluate_series(x, alpha, SeriesMode::brjuno(k), opts);
}

SeriesValue wilton(const ExactNumber& x, const Alpha& alpha, const SeriesOptions& opts) {
  return evaluate_series(x, alpha, SeriesMode::wilton(), opts);
}

SeriesValue evaluate_completed(const ExactNumber& y, const Alpha& alpha, SeriesMode mode, const SeriesOptions& opts) {
  const Normalized n = normalize(y, alpha);
  if (n.x.is_zero()) fail(Errc::SingularPoint, y.to_string() + " reduces to 0");
  return evaluate_series(n.x, alpha, mode, opts);
}

namespace {

Real partial_sum_at(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, std::size_t n, Precision prec) {
  Real sum(prec);
  if (n == 0) return sum;
  require_series_domain(x, alpha);
  Real beta = Real::from_int(1, prec);
  ExactNumber cur = x;
  for (std::size_t j = 0; j < n; ++j) {
    if (cur.is_zero()) fail(Errc::DivergesAtRational, "orbit of " + x.to_string() + " reaches 0 at step " + std::to_string(j));
    const Real xj = approx(cur, prec);
    Real term = pow(beta, mode.k) * -log(xj);
    if (mode.sigma() < 0 && j % 2 == 1) term = -term;
    sum += term;
    beta *= xj;
    if (j + 1 < n) {
      bool terminal = false;
      cur = step_or_throw(cur, alpha, terminal);
    }
  }
  return sum;
}

}  // namespace

Real partial_sum(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, std::size_t n, Precision prec) {
  require_k(mode.k);
  return with_escalation(x, prec, [&](const ExactNumber& xp, Precision p) {
    return partial_sum_at(xp, alpha, mode, n, p);
  });
}

namespace {

Real finite_rational(const Rational& x, SeriesMode mode, Precision prec) {
  const Rational y = x - Rational(floor_of(ExactNumber(x)), 1);
  Real sum(prec);
  if (y == Rational(0)) return sum;
  const CFExpansion e = expand(ExactNumber(y), Alpha::one(), std::numeric_limits<std::size_t>::max());
  const ConvergentSeq c = convergents(e);
  for (std::size_t j = 0; j < e.length(); ++j) {
    Real term = orbit_term(c.betas[j], mode.k, e.orbit[j], prec);
    if (mode.sigma() < 0 && j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

Real brjuno_finite_rational(const Rational& x, int k, Precision prec) {
  return finite_rational(x, SeriesMode::brjuno(k), prec);
}

Real wilton_finite_rational(const Rational& x, Precision prec) {
  return finite_rational(x, SeriesMode::wilton(), prec);
}

Real proxy_sum(const std::vector<BigInt>& q, int k, std::size_t n, bool alternating, Precision prec) {
  require_k(k);
  if (q.size() < n + 1) {
    fail(Errc::ExpansionTooShort, "proxy sum to N = " + std::to_string(n) + " needs q_0..q_N, have " +
                                      std::to_string(q.size()) + " denominators");
  }
  Real sum(prec);
  for (std::size_t j = 0; j < n; ++j) {
    Real term = log(Real::from_mpz(q[j + 1], prec)) / pow(Real::from_mpz(q[j], prec), k);
    if (alternating && j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Real proxy_sum(const ExactNumber& x, const Alpha& alpha, int k, std::size_t n, bool alternating, Precision prec) {
  require_k(k);
  if (n == 0) return Real(prec);
  const CFExpansion e = with_escalation(x, prec, [&](const ExactNumber& xp, Precision) {
    return unrolled(expand(xp, alpha, n), n);
  });
  if (e.length() < n) {
    fail(Errc::ExpansionTooShort, x.to_string() + " has only " + std::to_string(e.length()) +
                                      " digits, proxy sum needs " + std::to_string(n));
  }
  const ConvergentSeq c = convergents(e);
  const std::vector<BigInt> q(c.q.begin() + 1, c.q.end());
  return proxy_sum(q, k, n, alternating, prec);
}

Real apply_transfer(const RealFunction& f, int k, const Alpha& alpha, const ExactNumber& x, int sign,
                    Precision prec) {
  require_k(k);
  if (x.sign() <= 0 || compare(x, alpha.value()) >= 0) {
    fail(Errc::OutOfDomain, "transfer operator needs 0 < x < " + alpha.to_string() + ", got " + x.to_string());
  }
  prec = working_precision(x, prec);
  const Normalized reduced = normalize(reciprocal(x), alpha);
  Real out = pow(approx(x, prec), k) * f(reduced.x);
  return sign < 0 ? -out : out;
}

Real functional_eq_residual(const ExactNumber& x, const Alpha& alpha, SeriesMode mode, std::size_t n,
                            Precision prec) {
  if (n < 1) fail(Errc::InvalidArgument, "functional equation residual needs N >= 1");
  if (mode.kind == SeriesKind::Wilton) mode.k = 1;
  return with_escalation(x, prec, [&](const ExactNumber& xp, Precision p) {
    const Real s = partial_sum_at(xp, alpha, mode, n, p);
    const RealFunction inner = [&](const ExactNumber& t) { return partial_sum_at(t, alpha, mode, n - 1, p); };
    const Real transferred = apply_transfer(inner, mode.k, alpha, xp, mode.sigma(), p);
    return s + log(approx(xp, p)) - transferred;
  });
}

ExactNumber lemma_constant_cprime() { return make_quadratic(3, 1, 2, 5); }

namespace {

std::vector<TruncationReport> truncation_scan_at(const ExactNumber& x, std::size_t r_max, SeriesMode mode,
                                                 Precision prec) {
  if (x.sign() < 0 || compare(x, Rational(1)) >= 0) fail(Errc::OutOfDomain, "truncation check needs x in [0, 1), got " + x.to_string());
  const CFExpansion e = unrolled(expand(x, Alpha::one(), r_max), r_max);
  const ConvergentSeq c = convergents(e);
  const Real cprime = approx(lemma_constant_cprime(), prec);
  const Real ck = Real::from_int(2L * mode.k, prec) * cprime;

  std::vector<TruncationReport> out;
  Real prefix(prec);
  const std::size_t top = std::min(r_max, e.length());
  for (std::size_t r = 1; r <= top; ++r) {
    const std::size_t j = r - 1;
    Real term = orbit_term(c.betas[j], mode.k, e.orbit[j], prec);
    if (mode.sigma() < 0 && j % 2 == 1) term = -term;
    prefix += term;

    const Rational pr(c.p_at(static_cast<long>(r)), c.q_at(static_cast<long>(r)));
    const Real fin = finite_rational(pr, mode, prec);
    TruncationReport rep{x, r, mode, abs(fin - prefix), Real(prec), false};
    rep.bound = ck * approx(e.orbit[r], prec) / Real::from_mpz(c.q_at(static_cast<long>(r)), prec);
    rep.pass = rep.lhs <= rep.bound;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

std::vector<TruncationReport> truncation_bound_scan(const ExactNumber& x, std::size_t r_max, SeriesMode mode,
                                                    Precision prec) {
  if (mode.kind == SeriesKind::Wilton) mode.k = 1;
  require_k(mode.k);
  return with_escalation(x, prec, [&](const ExactNumber& xp, Precision p) {
    return truncation_scan_at(xp, r_max, mode, p);
  });
}

TruncationReport truncation_bound_check(const ExactNumber& x, std::size_t r, SeriesMode mode, Precision prec) {
  if (r < 1) fail(Errc::InvalidArgument, "truncation check needs r >= 1");
  std::vector<TruncationReport> all = truncation_bound_scan(x, r, mode, prec);
  if (all.size() < r) {
    fail(Errc::ExpansionTooShort, x.to_string() + " has a Gauss expansion of length " + std::to_string(all.size()) +
                                      " < r = " + std::to_string(r));
  }
  return std::move(all.back());
}

GapAudit gap_audit(const std::vector<ExactNumber>& samples, const Alpha& alpha, SeriesMode mode, std::size_t depth,
                   Precision prec) {
  if (mode.kind == SeriesKind::Wilton) mode.k = 1;
  require_k(mode.k);
  const bool alternating = mode.kind == SeriesKind::Wilton;
  GapAudit audit{Real(prec), Real(prec), {}};
  audit.rows.reserve(samples.size());
  for (const ExactNumber& x : samples) {
    const Precision p = working_precision(x, prec);
    const auto expansions = with_escalation(x, prec, [&](const ExactNumber& xp, Precision) {
      CFExpansion a = unrolled(expand(xp, alpha, depth), depth);
      CFExpansion b = alpha.is_one() ? a : unrolled(expand(xp, Alpha::one(), depth), depth);
      return std::pair{std::move(a), std::move(b)};
    });
    const CFExpansion& e = expansions.first;
    const CFExpansion& e1 = expansions.second;
    if (e.length() < depth || e1.length() < depth) {
      fail(Errc::ExpansionTooShort, x.to_string() + " expands to fewer than " + std::to_string(depth) + " digits");
    }
    const ConvergentSeq c = convergents(e);
    const ConvergentSeq c1 = alpha.is_one() ? c : convergents(e1);

    GapRow row{x.to_string(), Real(p), 0, Real(p)};
    Real series(p), proxy(p), proxy1(p);
    for (std::size_t j = 0; j < depth; ++j) {
      const bool neg = alternating && j % 2 == 1;
      Real term = pow(approx(c.betas[j], p), mode.k) * -log(approx(e.orbit[j], p));
      Real pterm = log(Real::from_mpz(c.q[j + 2], p)) / pow(Real::from_mpz(c.q[j + 1], p), mode.k);
      Real pterm1 = log(Real::from_mpz(c1.q[j + 2], p)) / pow(Real::from_mpz(c1.q[j + 1], p), mode.k);
      series += neg ? -term : term;
      proxy += neg ? -pterm : pterm;
      proxy1 += neg ? -pterm1 : pterm1;
      const Real gap = abs(series - proxy);
      if (gap > row.sup_gap) {
        row.sup_gap = gap;
        row.argmax_depth = j + 1;
      }
      const Real cross = abs(series - proxy1);
      if (cross > row.sup_gap_cross) row.sup_gap_cross = cross;
    }
    if (row.sup_gap > audit.sup_gap) audit.sup_gap = row.sup_gap;
    if (row.sup_gap_cross > audit.sup_gap_cross) audit.sup_gap_cross = row.sup_gap_cross;
    audit.rows.push_back(std::move(row));
  }
  return audit;
}

double proof_constant_gap_bound(int k) {
  require_k(k);
  const double c1 = 2.0 / std::exp(1.0);
  const double c2 = 5.0 * std::log(2.0);
  return 2.0 * c2 + 2.0 * (c1 + c2) + std::ldexp(c1, k + 1);
}

FastSeries::FastSeries(long double alpha, SeriesMode mode, long double cutoff, int max_terms)
    : alpha_(alpha), mode_(mode), cutoff_(cutoff), max_terms_(max_terms) {
  if (mode_.kind == SeriesKind::Wilton) mode_.k = 1;
  require_k(mode_.k);
}

long double FastSeries::operator()(long double y) const {
  long double x = y - std::floor(y);
  if (x > alpha_) x = 1.0L - x;
  const int k = mode_.k;
  const bool alternating = mode_.kind == SeriesKind::Wilton;
  long double sum = 0, beta = 1;
  for (int n = 0; n < max_terms_; ++n) {
    if (x <= 0) return std::numeric_limits<long double>::infinity();
    long double bk = beta;
    for (int i = 1; i < k; ++i) bk *= beta;
    const long double term = -bk * std::log(x);
    sum += (alternating && n % 2 == 1) ? -term : term;
    beta *= x;
    bk = beta;
    for (int i = 1; i < k; ++i) bk *= beta;
    if (bk < cutoff_) break;
    const long double inv = 1.0L / x;
    const long double m = std::floor(inv);
    const long double frac = inv - m;
    x = frac >= alpha_ ? (m + 1) - inv : frac;
  }
  return sum;
}

}  // namespace alphacf
