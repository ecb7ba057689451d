#include "alphacf/orbit_compare.hpp"

#include <algorithm>
#include <cmath>

namespace alphacf {

namespace {

void require_unimodular(const Matrix2& m) {
  const BigInt det = m.det();
  if (det != 1 && det != -1) fail(Errc::InvalidArgument, "matrix determinant must be +-1, got " + det.get_str());
}

nlohmann::ordered_json json_int(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Matrix2 Matrix2::inverse() const {
  require_unimodular(*this);
  const BigInt det = this->det();
  return {d * det, -b * det, -c * det, a * det};
}

Matrix2 Matrix2::power(unsigned n) const {
  Matrix2 out, base = *this;
  while (n > 0) {
    if (n & 1U) out = out * base;
    base = base * base;
    n >>= 1U;
  }
  return out;
}

ExactNumber mobius_apply(const Matrix2& m, const ExactNumber& x) {
  require_unimodular(m);
  const ExactNumber den = ExactNumber(Rational(m.c, 1)) * x + ExactNumber(Rational(m.d, 1));
  if (den.is_zero()) fail(Errc::PoleHit, "c x + d = 0 at x = " + x.to_string());
  if (den.is_float() && den.flt().contains_zero()) fail(Errc::PoleHit, "c x + d may vanish at x = " + x.to_string());
  return (ExactNumber(Rational(m.a, 1)) * x + ExactNumber(Rational(m.b, 1))) / den;
}

LadderPoint ladder(std::size_t i) {
  LadderPoint p{0, Rational(1, 2), BigInt(0), BigInt(1)};
  for (std::size_t n = 1; n <= i; ++n) {
    p.i = n;
    p.t = Rational(1) / (Rational(3) - p.t);
    BigInt s_next = 3 * p.s - p.r;
    p.r = p.s;
    p.s = std::move(s_next);
  }
  return p;
}

std::vector<LadderPoint> ladder_sequence(std::size_t count) {
  std::vector<LadderPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) {
      out.push_back(ladder(0));
      continue;
    }
    const LadderPoint& prev = out.back();
    out.push_back({i, Rational(1) / (Rational(3) - prev.t), prev.s, 3 * prev.s - prev.r});
  }
  return out;
}

std::string to_string(StepEvent e) {
  switch (e) {
    case StepEvent::Coincide: return "coincide";
    case StepEvent::Reflected: return "reflected";
    case StepEvent::Shifted: return "shifted";
  }
  return "?";
}

MatchedTrace matched_orbits(const ExactNumber& x, const Alpha& alpha, std::size_t depth) {
  if (compare(alpha.value(), golden_conjugate()) > 0) {
    fail(Errc::OutOfRange, "matched orbits need alpha <= (sqrt(5)-1)/2, got " + alpha.to_string());
  }
  if (x.sign() < 0 || compare(x, Rational(1, 2)) > 0) {
    fail(Errc::OutOfDomain, "matched orbits need x in [0, 1/2], got " + x.to_string());
  }
  const Alpha half = Alpha::half();
  const CFExpansion eh = unrolled(expand(x, half, depth, OnAmbiguity::Truncate), depth);
  const CFExpansion ea = unrolled(expand(x, alpha, depth, OnAmbiguity::Truncate), depth);
  const ConvergentSeq ch = convergents(eh);
  const ConvergentSeq ca = convergents(ea);

  MatchedTrace tr;
  tr.x = x;
  tr.alpha = alpha;
  const std::size_t len = std::min(eh.length(), ea.length());
  tr.terminated = len < depth;
  bool was_coincident = true;
  for (std::size_t j = 1; j <= len; ++j) {
    MatchedStep st;
    st.j = j;
    st.half = eh.digits[j - 1];
    st.alpha = ea.digits[j - 1];
    st.x_half = eh.orbit[j];
    st.x_alpha = ea.orbit[j];
    st.q_half = ch.q_at(static_cast<long>(j));
    st.q_alpha = ca.q_at(static_cast<long>(j));
    if (compare(st.x_half, st.x_alpha) == 0) {
      st.event = StepEvent::Coincide;
    } else if (compare(st.x_half, ExactNumber(Rational(1)) - st.x_alpha) == 0) {
      st.event = StepEvent::Reflected;
    } else {
      st.event = StepEvent::Shifted;
    }
    if (was_coincident && !(st.half == st.alpha)) tr.divergences.push_back(j);
    was_coincident = st.event == StepEvent::Coincide;
    tr.steps.push_back(std::move(st));
  }
  return tr;
}

QClassification q_difference_classify(const MatchedTrace& trace) {
  QClassification out;
  BigInt q_prev = trace.q0;
  const Digit three_minus{3, -1}, two_plus{2, 1};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const MatchedStep& st = trace.steps[i];
    const BigInt diff = st.q_half - st.q_alpha;
    QClass cls = QClass::Other;
    if (diff == 0) {
      cls = QClass::Zero;
    } else if (diff == q_prev) {
      cls = QClass::QPrev;
    } else {
      out.violations.push_back({st.j, "class", "q_half - q_alpha = " + diff.get_str() + ", q_prev = " + q_prev.get_str()});
    }
    out.classes.push_back(cls);

    if (cls == QClass::QPrev && i + 1 < trace.steps.size()) {
      const Digit& next = trace.steps[i + 1].half;
      if (!(next == three_minus) && !(next == two_plus)) {
        out.violations.push_back({st.j, "digit", "next 1/2-digit (" + next.a.get_str() + "," + std::to_string(next.eps) + ")"});
      }
    }

    const BigInt& lo = st.q_half < st.q_alpha ? st.q_half : st.q_alpha;
    const BigInt& hi = st.q_half < st.q_alpha ? st.q_alpha : st.q_half;
    if (hi > 2 * lo) {
      out.violations.push_back({st.j, "log_gap", "q_half = " + st.q_half.get_str() + ", q_alpha = " + st.q_alpha.get_str()});
    }
    const double gap = std::fabs(std::log(mpz_get_d(st.q_half.get_mpz_t())) - std::log(mpz_get_d(st.q_alpha.get_mpz_t())));
    out.max_log_gap = std::max(out.max_log_gap, gap);

    if (cls == QClass::QPrev && !(st.q_alpha >= st.q_half - q_prev && st.q_half - q_prev >= q_prev)) {
      out.violations.push_back({st.j, "ordering", "q_alpha = " + st.q_alpha.get_str() + ", q_half = " +
                                                     st.q_half.get_str() + ", q_prev = " + q_prev.get_str()});
    }
    q_prev = st.q_half;
  }
  return out;
}

nlohmann::ordered_json to_json(const MatchedStep& step) {
  nlohmann::ordered_json j;
  j["j"] = step.j;
  j["digit_half"] = {json_int(step.half.a), step.half.eps};
  j["digit_alpha"] = {json_int(step.alpha.a), step.alpha.eps};
  j["x_half"] = step.x_half.to_string();
  j["x_alpha"] = step.x_alpha.to_string();
  j["q_half"] = json_int(step.q_half);
  j["q_alpha"] = json_int(step.q_alpha);
  j["event"] = to_string(step.event);
  return j;
}

}  // namespace alphacf
