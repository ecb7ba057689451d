#include "alphacf/numkit.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace alphacf {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN is accepted as '-'.
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (!std::isspace(ch)) out.push_back(static_cast<char>(ch));
  }
  return out;
}

BigInt parse_int(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  const std::size_t digits_from = (!body.empty() && body[0] == '-') ? 1 : 0;
  if (body.size() == digits_from ||
      !std::all_of(body.begin() + static_cast<std::ptrdiff_t>(digits_from), body.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    fail(Errc::ParseError, "not an integer: '" + s + "'");
  }
  return BigInt(body, 10);
}

// d = s^2 * core with core squarefree.
std::pair<BigInt, BigInt> split_square(BigInt d) {
  BigInt s = 1;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
  if (root * root == d) return {root, BigInt(1)};
  for (BigInt p = 2; p * p <= d && p < 2000000; ++p) {
    const BigInt p2 = p * p;
    while (d % p2 == 0) {
      d /= p2;
      s *= p;
    }
  }
  mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
  if (root * root == d) return {s * root, BigInt(1)};
  return {s, d};
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// sign(a + b*sqrt(d)) for d non-square.
int quad_sign(const BigInt& a, const BigInt& b, const BigInt& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

// Generic quadratic (a + b*sqrt(d))/c with matching radicands.
struct Quad {
  BigInt a, b, c, d;
};

Quad as_quad(const ExactNumber& v, const BigInt& d) {
  if (v.is_rational()) return {v.rational().num(), BigInt(0), v.rational().den(), d};
  const Surd& s = v.surd();
  return {s.a(), s.b(), s.c(), s.d()};
}

ExactNumber from_quad(const Quad& q) { return make_quadratic(q.a, q.b, q.c, q.d); }

BigInt common_radicand(const ExactNumber& v, const ExactNumber& w) {
  const BigInt dv = v.radicand();
  const BigInt dw = w.radicand();
  if (dv == 1) return dw;
  if (dw == 1 || dv == dw) return dv;
  fail(Errc::MixedRadical, "sqrt(" + dv.get_str() + ") and sqrt(" + dw.get_str() + ") in one operation");
}

Precision float_precision(const ExactNumber& a, const ExactNumber& b) {
  Precision p = 0;
  if (a.is_float()) p = std::max(p, a.flt().precision());
  if (b.is_float()) p = std::max(p, b.flt().precision());
  return p;
}

Real with_prec(const Real& v, Precision prec) {
  Real r(prec);
  mpfr_set(r.get(), v.get(), MPFR_RNDN);
  return r;
}


}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) fail(Errc::DivisionByZero, "zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.v_ == 0) fail(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s), BigInt(1));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

// ---------------------------------------------------------------- Surd

Surd::Surd(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (d_ <= 1 || split_square(d_).second != d_) fail(Errc::InvalidArgument, "radicand must be squarefree and > 1");
  if (b_ == 0) fail(Errc::InvalidArgument, "surd with zero radical coefficient");
  if (c_ <= 0) fail(Errc::InvalidArgument, "surd denominator must be positive");
  if (gcd3(a_, b_, c_) != 1) fail(Errc::InvalidArgument, "surd coefficients not in lowest terms");
}

std::string Surd::to_string() const {
  std::string out = "(" + a_.get_str();
  if (b_ > 0) {
    out += "+" + b_.get_str();
  } else {
    out += "-" + BigInt(-b_).get_str();
  }
  return out + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
}

int Surd::sign() const { return quad_sign(a_, b_, d_); }

BigInt Surd::floor() const {
  // floor(b*sqrt(d)) is exact from the integer square root of b^2 d, which is
  // never a perfect square.
  BigInt r;
  const BigInt b2d = b_ * b_ * d_;
  mpz_sqrt(r.get_mpz_t(), b2d.get_mpz_t());
  const BigInt floor_bsqrt = b_ > 0 ? r : BigInt(-r - 1);
  BigInt out;
  const BigInt num = a_ + floor_bsqrt;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), c_.get_mpz_t());
  return out;
}

ExactNumber make_quadratic(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) fail(Errc::DivisionByZero, "zero denominator in quadratic number");
  if (d < 0) fail(Errc::InvalidArgument, "negative radicand");
  if (b == 0 || d == 0) return Rational(a, c);
  auto [s, core] = split_square(d);
  b *= s;
  if (core == 1) return Rational(a + b, c);
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const BigInt g = gcd3(a, b, c);
  if (g != 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return Surd(Surd::Trusted{}, std::move(a), std::move(b), std::move(c), std::move(core));
}

ExactNumber golden_conjugate() { return make_quadratic(-1, 1, 2, 5); }

// ---------------------------------------------------------------- Float

Float::Float(Precision prec) : lo_(prec), hi_(prec) {}

Float::Float(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!lo_.is_finite() || !hi_.is_finite()) fail(Errc::InvalidArgument, "non-finite interval bound");
  if (hi_ < lo_) fail(Errc::InvalidArgument, "interval with lo > hi");
  if (hi_.precision() != lo_.precision()) {
    const Precision p = std::max(lo_.precision(), hi_.precision());
    mpfr_prec_round(lo_.get(), p, MPFR_RNDD);
    mpfr_prec_round(hi_.get(), p, MPFR_RNDU);
  }
}

Float Float::point(const Real& v) { return Float(v, v); }

Float Float::enclose(const mpq_class& q, Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Float(std::move(lo), std::move(hi));
}

namespace {

bool opposite_signs(const Surd& s) { return sgn(s.a()) * sgn(s.b()) < 0; }

}  // namespace

Float Float::enclose(const Surd& s, Precision prec) {
  const Precision work = prec + 32;
  Real root_lo(work), root_hi(work);
  mpfr_set_z(root_lo.get(), s.d().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root_lo.get(), root_lo.get(), MPFR_RNDD);
  mpfr_set_z(root_hi.get(), s.d().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root_hi.get(), root_hi.get(), MPFR_RNDU);
  const Float root(std::move(root_lo), std::move(root_hi));
  const Float a = Float::enclose(mpq_class(s.a()), work);
  const Float b = Float::enclose(mpq_class(s.b()), work);
  const Float c = Float::enclose(mpq_class(s.c()), work);
  // a + b sqrt(d) cancels when the terms have opposite signs; the conjugate
  // form (a^2 - b^2 d)/(a - b sqrt(d)) adds same-sign terms instead.
  const Float out = opposite_signs(s)
                        ? Float::enclose(mpq_class(s.a() * s.a() - s.b() * s.b() * s.d()), work) / ((a - b * root) * c)
                        : (a + b * root) / c;
  Real lo(prec), hi(prec);
  mpfr_set(lo.get(), out.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), out.hi().get(), MPFR_RNDU);
  return Float(std::move(lo), std::move(hi));
}

Float Float::parse(std::string_view text, Precision prec) {
  const std::string s = strip(text);
  Real v(prec);
  char* end = nullptr;
  mpfr_strtofr(v.get(), s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') fail(Errc::ParseError, "not a decimal number: '" + s + "'");
  return point(v);
}

Real Float::mid() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  mpfr_prec_round(m.get(), precision(), MPFR_RNDN);
  return m;
}

Real Float::radius() const {
  const Real m = mid();
  Real r1(precision()), r2(precision());
  mpfr_sub(r1.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), m.get(), lo_.get(), MPFR_RNDU);
  return r1 < r2 ? r2 : r1;
}

BigInt Float::floor() const {
  BigInt flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo_.get(), MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi_.get(), MPFR_RNDD);
  if (flo != fhi) fail(Errc::AmbiguousFloor, "interval " + to_string() + " straddles an integer");
  return flo;
}

std::string Float::to_string() const {
  const int digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 1;
  if (is_point()) return lo_.to_string(digits);
  return mid().to_string(digits) + "+-" + radius().to_string(3);
}

Float operator+(const Float& a, const Float& b) {
  const Precision p = std::max(a.precision(), b.precision());
  Real lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Float(std::move(lo), std::move(hi));
}

Float operator-(const Float& a, const Float& b) {
  const Precision p = std::max(a.precision(), b.precision());
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Float(std::move(lo), std::move(hi));
}

Float operator*(const Float& a, const Float& b) {
  const Precision p = std::max(a.precision(), b.precision());
  const Real* xs[2] = {&a.lo_, &a.hi_};
  const Real* ys[2] = {&b.lo_, &b.hi_};
  Real lo(p), hi(p), t(p);
  bool first = true;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  return Float(std::move(lo), std::move(hi));
}

Float operator/(const Float& a, const Float& b) {
  if (b.contains_zero()) fail(Errc::DivisionByZero, "divisor interval " + b.to_string() + " contains 0");
  const Precision p = std::max(a.precision(), b.precision());
  Real lo(p), hi(p);
  mpfr_ui_div(lo.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * Float(std::move(lo), std::move(hi));
}

Float operator-(const Float& a) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDN);
  mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDN);
  return Float(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------- ExactNumber

ExactNumber ExactNumber::parse(std::string_view text, Precision float_prec) {
  const std::string s = strip(text);
  if (s.empty()) fail(Errc::ParseError, "empty number");
  const auto sq = s.find("sqrt(");
  if (sq == std::string::npos) {
    if (s.find_first_of(".eE") != std::string::npos) return Float::parse(s, float_prec);
    return Rational::parse(s);
  }

  // [(] prefix sqrt(D) [)] [/C]
  std::string inner = s;
  std::string denom = "1";
  const auto close_sqrt = s.find(')', sq);
  if (close_sqrt == std::string::npos) fail(Errc::ParseError, "unterminated sqrt( in '" + s + "'");
  if (s[0] == '(') {
    const auto close = s.find(')', close_sqrt + 1);
    if (close == std::string::npos) fail(Errc::ParseError, "unbalanced parentheses in '" + s + "'");
    inner = s.substr(1, close - 1);
    const std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '/') fail(Errc::ParseError, "unexpected '" + rest + "' in '" + s + "'");
      denom = rest.substr(1);
    }
  } else {
    const std::string rest = s.substr(close_sqrt + 1);
    if (!rest.empty()) {
      // Tail after sqrt(D): "/C" or "+A"/"-A" (e.g. "sqrt(2)-1").
      if (rest[0] == '/') {
        denom = rest.substr(1);
        inner = s.substr(0, close_sqrt + 1);
      } else {
        const std::string term = s.substr(0, close_sqrt + 1);
        const std::string constant = rest[0] == '+' ? rest.substr(1) : rest;
        inner = constant + (term[0] == '-' || term[0] == '+' ? "" : "+") + term;
      }
    }
  }

  const auto isq = inner.find("sqrt(");
  const auto iclose = inner.find(')', isq);
  if (isq == std::string::npos || iclose == std::string::npos || iclose + 1 != inner.size()) {
    fail(Errc::ParseError, "malformed surd '" + s + "'");
  }
  const BigInt d = parse_int(inner.substr(isq + 5, iclose - isq - 5));
  std::string prefix = inner.substr(0, isq);
  BigInt a = 0;
  BigInt b = 1;
  if (!prefix.empty() && prefix.back() == '*') {
    prefix.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = prefix.size(); i-- > 1;) {
      if (prefix[i] == '+' || prefix[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      b = parse_int(prefix);
    } else {
      a = parse_int(prefix.substr(0, split));
      b = parse_int(prefix.substr(split));
    }
  } else if (!prefix.empty()) {
    const char sign = prefix.back();
    if (sign != '+' && sign != '-') fail(Errc::ParseError, "malformed surd '" + s + "'");
    b = sign == '-' ? -1 : 1;
    prefix.pop_back();
    if (!prefix.empty()) a = parse_int(prefix);
  }
  if (d < 0) fail(Errc::ParseError, "negative radicand in '" + s + "'");
  const BigInt c = parse_int(denom);
  if (c == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
  return make_quadratic(a, b, c, d);
}

bool ExactNumber::is_zero() const {
  if (is_rational()) return rational().value() == 0;
  if (is_float()) return flt().lo().is_zero() && flt().hi().is_zero();
  return false;
}

int ExactNumber::sign() const {
  switch (kind()) {
    case NumberKind::Rational: return sgn(rational().value());
    case NumberKind::Surd: return surd().sign();
    case NumberKind::Float: {
      const Float& f = flt();
      if (f.lo().sign() > 0) return 1;
      if (f.hi().sign() < 0) return -1;
      if (f.lo().is_zero() && f.hi().is_zero()) return 0;
      fail(Errc::AmbiguousComparison, "sign of interval " + f.to_string());
    }
  }
  return 0;
}

std::string ExactNumber::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, v_);
}

BigInt ExactNumber::radicand() const {
  if (is_rational()) return 1;
  if (is_surd()) return surd().d();
  return 0;
}

namespace {

ExactNumber float_op(const ExactNumber& a, const ExactNumber& b, char op) {
  const Precision p = float_precision(a, b);
  const Float x = enclose(a, p);
  const Float y = enclose(b, p);
  switch (op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    default: return x / y;
  }
}

}  // namespace

ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_float() || b.is_float()) return float_op(a, b, '+');
  if (a.is_rational() && b.is_rational()) return a.rational() + b.rational();
  const BigInt d = common_radicand(a, b);
  const Quad x = as_quad(a, d), y = as_quad(b, d);
  return from_quad({x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c, d});
}

ExactNumber operator-(const ExactNumber& a) {
  switch (a.kind()) {
    case NumberKind::Rational: return -a.rational();
    case NumberKind::Surd: {
      const Surd& s = a.surd();
      return Surd(Surd::Trusted{}, -s.a(), -s.b(), s.c(), s.d());
    }
    case NumberKind::Float: return -a.flt();
  }
  return a;
}

ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_float() || b.is_float()) return float_op(a, b, '-');
  return a + (-b);
}

ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_float() || b.is_float()) return float_op(a, b, '*');
  if (a.is_rational() && b.is_rational()) return a.rational() * b.rational();
  const BigInt d = common_radicand(a, b);
  const Quad x = as_quad(a, d), y = as_quad(b, d);
  return from_quad({x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, x.c * y.c, d});
}

ExactNumber operator/(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_float() || b.is_float()) return float_op(a, b, '/');
  return a * reciprocal(b);
}

ExactNumber abs(const ExactNumber& v) {
  if (v.is_float()) {
    const Float& f = v.flt();
    if (f.lo().sign() >= 0) return v;
    if (f.hi().sign() <= 0) return -f;
    Real hi = -f.lo() < f.hi() ? f.hi() : -f.lo();
    return Float(Real(f.precision()), std::move(hi));
  }
  return v.sign() < 0 ? -v : v;
}

BigInt floor_of(const ExactNumber& v) {
  switch (v.kind()) {
    case NumberKind::Rational: {
      BigInt out;
      const mpq_class& q = v.rational().value();
      mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return out;
    }
    case NumberKind::Surd: return v.surd().floor();
    case NumberKind::Float: return v.flt().floor();
  }
  return 0;
}

ExactNumber reciprocal(const ExactNumber& v) {
  switch (v.kind()) {
    case NumberKind::Rational:
      if (v.rational().value() == 0) fail(Errc::DivisionByZero, "reciprocal of 0");
      return Rational(1) / v.rational();
    case NumberKind::Surd: {
      // c/(a + b sqrt d) = c (a - b sqrt d)/(a^2 - b^2 d)
      const Surd& s = v.surd();
      return make_quadratic(s.c() * s.a(), -s.c() * s.b(), s.a() * s.a() - s.b() * s.b() * s.d(), s.d());
    }
    case NumberKind::Float: {
      const Float& f = v.flt();
      if (f.contains_zero()) fail(Errc::DivisionByZero, "reciprocal of interval " + f.to_string() + " containing 0");
      const Precision p = f.precision();
      Real lo(p), hi(p);
      mpfr_ui_div(lo.get(), 1, f.hi().get(), MPFR_RNDD);
      mpfr_ui_div(hi.get(), 1, f.lo().get(), MPFR_RNDU);
      return Float(std::move(lo), std::move(hi));
    }
  }
  return v;
}

std::strong_ordering compare(const ExactNumber& v, const ExactNumber& w) {
  auto order = [](int s) {
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (v.is_float() || w.is_float()) {
    const Precision p = float_precision(v, w);
    const Float x = enclose(v, p);
    const Float y = enclose(w, p);
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (x.lo() > y.hi()) return std::strong_ordering::greater;
    if (x.is_point() && y.is_point() && x.lo() == y.lo()) return std::strong_ordering::equal;
    fail(Errc::AmbiguousComparison, "intervals " + x.to_string() + " and " + y.to_string() + " overlap");
  }
  const BigInt dv = v.radicand();
  const BigInt dw = w.radicand();
  if (dv == 1 || dw == 1 || dv == dw) return order((v - w).sign());
  // Distinct squarefree radicals: 1, sqrt(dv), sqrt(dw) are linearly
  // independent over Q, so the values differ and refinement terminates.
  for (Precision p = 64;; p *= 2) {
    const Float x = enclose(v, p);
    const Float y = enclose(w, p);
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (x.lo() > y.hi()) return std::strong_ordering::greater;
  }
}

Float enclose(const ExactNumber& v, Precision prec) {
  switch (v.kind()) {
    case NumberKind::Rational: return Float::enclose(v.rational().value(), prec);
    case NumberKind::Surd: return Float::enclose(v.surd(), prec);
    case NumberKind::Float: return v.flt();
  }
  return Float(prec);
}

Real approx(const ExactNumber& v, Precision prec) {
  switch (v.kind()) {
    case NumberKind::Rational: return Real::from_mpq(v.rational().value(), prec);
    case NumberKind::Surd: {
      const Surd& s = v.surd();
      const Precision work = prec + 16;
      const Real root = sqrt(Real::from_mpz(s.d(), work));
      const Real a = Real::from_mpz(s.a(), work), b = Real::from_mpz(s.b(), work), c = Real::from_mpz(s.c(), work);
      const Real out = opposite_signs(s)
                           ? Real::from_mpz(s.a() * s.a() - s.b() * s.b() * s.d(), work) / ((a - b * root) * c)
                           : (a + b * root) / c;
      return with_prec(out, prec);
    }
    case NumberKind::Float: return with_prec(v.flt().mid(), prec);
  }
  return Real(prec);
}

Precision working_precision(const ExactNumber& v, Precision fallback) {
  return v.is_float() ? v.flt().precision() : fallback;
}

}  // namespace alphacf
