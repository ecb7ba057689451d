#include "alphacf/cf_core.hpp"

#include <map>
#include <tuple>

namespace alphacf {

Alpha::Alpha(ExactNumber value) : value_(std::move(value)), approx_(0) {
  if (!value_.is_exact()) fail(Errc::OutOfDomain, "alpha must be exact (rational or surd)");
  if (compare(value_, Rational(1, 2)) < 0 || compare(value_, Rational(1)) > 0) {
    fail(Errc::OutOfDomain, "alpha = " + value_.to_string() + " is outside [1/2, 1]");
  }
  approx_ = alphacf::approx(value_, 80).to_long_double();
}

Alpha Alpha::parse(std::string_view text) { return Alpha(ExactNumber::parse(text)); }
Alpha Alpha::half() { return Alpha(Rational(1, 2)); }
Alpha Alpha::one() { return Alpha(Rational(1)); }
Alpha Alpha::golden() { return Alpha(golden_conjugate()); }

bool Alpha::is_one() const { return value_.is_rational() && value_.rational() == Rational(1); }

StepResult alpha_step(const ExactNumber& x, const Alpha& alpha) {
  if (x.sign() <= 0) fail(Errc::OutOfDomain, "alpha_step needs x > 0, got " + x.to_string());
  if (compare(x, alpha.value()) > 0) {
    fail(Errc::OutOfDomain, "alpha_step needs x <= alpha = " + alpha.to_string() + ", got " + x.to_string());
  }
  const ExactNumber y = reciprocal(x);
  const BigInt m = floor_of(y);
  const ExactNumber t = y - ExactNumber(Rational(m, 1));
  if (t.is_zero()) return {Digit{m, 1}, ExactNumber(Rational(0)), true};
  if (t.is_float() && t.flt().contains_zero()) {
    fail(Errc::AmbiguousFloor, "1/x = " + y.to_string() + " may be an integer");
  }
  if (compare(t, alpha.value()) < 0) return {Digit{m, 1}, t, false};
  const BigInt up = m + 1;
  return {Digit{up, -1}, ExactNumber(Rational(up, 1)) - y, false};
}

CFExpansion expand(const ExactNumber& x, const Alpha& alpha, std::size_t max_steps, OnAmbiguity on_ambiguity) {
  if (x.sign() < 0 || compare(x, alpha.value()) > 0) {
    fail(Errc::OutOfDomain, "expand needs x in [0, " + alpha.to_string() + "], got " + x.to_string());
  }
  CFExpansion e;
  e.alpha = alpha;
  e.x0 = x;
  e.orbit.push_back(x);

  using Key = std::tuple<BigInt, BigInt, BigInt>;
  std::map<Key, std::size_t> seen;
  if (x.is_surd()) seen.emplace(Key{x.surd().a(), x.surd().b(), x.surd().c()}, 0);

  if (x.is_zero()) {
    e.terminated = true;
    return e;
  }
  while (e.digits.size() < max_steps) {
    StepResult step;
    try {
      step = alpha_step(e.orbit.back(), alpha);
    } catch (const Error& err) {
      const bool ambiguous = err.code() == Errc::AmbiguousFloor || err.code() == Errc::AmbiguousComparison;
      if (!ambiguous || !e.orbit.back().is_float()) throw;
      if (on_ambiguity == OnAmbiguity::Throw) {
        fail(Errc::PrecisionExhausted, "Float orbit lost branch resolution after " +
                                           std::to_string(e.digits.size()) + " steps (" + err.what() + ")");
      }
      e.precision_exhausted = true;
      break;
    }
    e.digits.push_back(std::move(step.digit));
    e.orbit.push_back(std::move(step.next));
    if (step.terminal) {
      e.terminated = true;
      break;
    }
    const ExactNumber& cur = e.orbit.back();
    if (cur.is_surd()) {
      const std::size_t j = e.orbit.size() - 1;
      auto [it, inserted] = seen.emplace(Key{cur.surd().a(), cur.surd().b(), cur.surd().c()}, j);
      if (!inserted) {
        e.period = Period{it->second, j - it->second};
        break;
      }
    }
  }
  return e;
}

CFExpansion unrolled(const CFExpansion& e, std::size_t steps) {
  CFExpansion out = e;
  if (!e.period || e.period->length == 0) return out;
  const std::size_t pre = e.period->preperiod;
  const std::size_t len = e.period->length;
  while (out.digits.size() < steps) {
    const std::size_t j = pre + (out.digits.size() - pre) % len;
    out.digits.push_back(e.digits[j]);
    out.orbit.push_back(e.orbit[j + 1]);
  }
  return out;
}

ConvergentSeq convergents(const CFExpansion& e) {
  ConvergentSeq s;
  const std::size_t n = e.digits.size();
  s.p.reserve(n + 2);
  s.q.reserve(n + 2);
  s.p = {BigInt(1), BigInt(0)};
  s.q = {BigInt(0), BigInt(1)};
  int eps_prev = 1;
  for (const Digit& d : e.digits) {
    const std::size_t k = s.p.size();
    s.p.push_back(d.a * s.p[k - 1] + eps_prev * s.p[k - 2]);
    s.q.push_back(d.a * s.q[k - 1] + eps_prev * s.q[k - 2]);
    eps_prev = d.eps;
  }
  s.betas.reserve(s.p.size());
  for (std::size_t i = 0; i < s.p.size(); ++i) {
    s.betas.push_back(abs(ExactNumber(Rational(s.q[i], 1)) * e.x0 - ExactNumber(Rational(s.p[i], 1))));
  }
  return s;
}

std::vector<ExactNumber> beta_products(const CFExpansion& e, std::size_t n) {
  if (n >= e.orbit.size()) {
    fail(Errc::ExpansionTooShort, "beta_" + std::to_string(n) + " needs orbit point x_" + std::to_string(n) +
                                      ", expansion has " + std::to_string(e.orbit.size()) + " points");
  }
  std::vector<ExactNumber> out;
  out.reserve(n + 2);
  out.emplace_back(Rational(1));
  for (std::size_t j = 0; j <= n; ++j) out.push_back(out.back() * e.orbit[j]);
  return out;
}

Normalized normalize(const ExactNumber& y, const Alpha& alpha) {
  const BigInt m = floor_of(y);
  const ExactNumber t = y - ExactNumber(Rational(m, 1));
  if (compare(t, alpha.value()) <= 0) return {t, false};
  return {ExactNumber(Rational(m + 1, 1)) - y, true};
}

nlohmann::ordered_json to_json(const CFExpansion& e) {
  nlohmann::ordered_json j;
  j["x"] = e.x0.to_string();
  j["alpha"] = e.alpha.to_string();
  auto digits = nlohmann::ordered_json::array();
  for (const Digit& d : e.digits) {
    if (d.a.fits_slong_p()) {
      digits.push_back({d.a.get_si(), d.eps});
    } else {
      digits.push_back({d.a.get_str(), d.eps});
    }
  }
  j["digits"] = std::move(digits);
  j["terminated"] = e.terminated;
  if (e.period) {
    j["period"] = {e.period->preperiod, e.period->length};
  } else {
    j["period"] = nullptr;
  }
  return j;
}

}  // namespace alphacf
