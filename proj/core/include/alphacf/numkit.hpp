#pragma once

// Exact and interval number representations for continued fraction work.
//
// ExactNumber is the input currency of every evaluator. It holds one of
//   Rational  p/q in lowest terms, q > 0
//   Surd      (a + b*sqrt(d))/c, d > 1 squarefree, b != 0, c > 0, gcd(a,b,c) = 1
//   Float     a closed MPFR interval [lo, hi] with outward rounding
// Rational and Surd arithmetic is exact. Float arithmetic encloses the true
// result, so AmbiguousFloor/AmbiguousComparison are sound signals to raise
// precision.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "alphacf/errors.hpp"
#include "alphacf/real.hpp"

namespace alphacf {

class ExactNumber;

class Rational {
 public:
  Rational() = default;
  Rational(long num) : v_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);
  explicit Rational(mpq_class v);

  const mpq_class& value() const noexcept { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string to_string() const;
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

class Surd {
 public:
  // Requires canonical fields; throws InvalidArgument otherwise.
  // Use make_quadratic() to build from arbitrary coefficients.
  Surd(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  std::string to_string() const;
  // Sign of the represented value (never zero).
  int sign() const;
  BigInt floor() const;
  Surd conjugate() const { return Surd(Trusted{}, a_, -b_, c_, d_); }

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  struct Trusted {};
  Surd(Trusted, BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  friend class ExactNumber;
  friend ExactNumber make_quadratic(BigInt a, BigInt b, BigInt c, BigInt d);
  friend ExactNumber operator-(const ExactNumber& a);

  BigInt a_, b_, c_, d_;
};

class Float {
 public:
  explicit Float(Precision prec = kDefaultPrecision);
  // Requires lo <= hi, both finite.
  Float(Real lo, Real hi);

  static Float point(const Real& v);
  static Float enclose(const mpq_class& q, Precision prec);
  static Float enclose(const Surd& s, Precision prec);
  // Decimal string rounded to the nearest `prec`-bit value. The result is
  // that binary number as a point; later arithmetic widens it.
  static Float parse(std::string_view text, Precision prec);

  const Real& lo() const noexcept { return lo_; }
  const Real& hi() const noexcept { return hi_; }
  Precision precision() const noexcept { return lo_.precision(); }
  Real mid() const;
  // Rounded up, so lo >= mid - radius and hi <= mid + radius.
  Real radius() const;
  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  // Unique floor of every member; throws AmbiguousFloor otherwise.
  BigInt floor() const;
  std::string to_string() const;

  friend Float operator+(const Float& a, const Float& b);
  friend Float operator-(const Float& a, const Float& b);
  friend Float operator*(const Float& a, const Float& b);
  friend Float operator/(const Float& a, const Float& b);
  friend Float operator-(const Float& a);
  friend bool operator==(const Float& a, const Float& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Real lo_, hi_;
};

enum class NumberKind { Rational, Surd, Float };

class ExactNumber {
 public:
  ExactNumber() : v_(Rational{}) {}
  ExactNumber(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ExactNumber(Surd s) : v_(std::move(s)) {}      // NOLINT(google-explicit-constructor)
  ExactNumber(Float f) : v_(std::move(f)) {}     // NOLINT(google-explicit-constructor)
  ExactNumber(long n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)

  // "p/q" or "p" -> Rational; "(a+b*sqrt(d))/c" (and shorter forms such as
  // "sqrt(2)-1") -> Surd; anything with a decimal point or exponent -> Float.
  static ExactNumber parse(std::string_view text, Precision float_prec = kDefaultPrecision);

  NumberKind kind() const noexcept { return static_cast<NumberKind>(v_.index()); }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_surd() const noexcept { return std::holds_alternative<Surd>(v_); }
  bool is_float() const noexcept { return std::holds_alternative<Float>(v_); }
  bool is_exact() const noexcept { return !is_float(); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const Surd& surd() const { return std::get<Surd>(v_); }
  const Float& flt() const { return std::get<Float>(v_); }
  const std::variant<Rational, Surd, Float>& storage() const noexcept { return v_; }

  // True only for an exact zero (Rational 0 or the Float point [0,0]).
  bool is_zero() const;
  // Throws AmbiguousComparison for a Float interval containing 0 and a nonzero point.
  int sign() const;
  std::string to_string() const;

  // Radicand of a Surd, 1 for Rational, 0 for Float.
  BigInt radicand() const;

  friend bool operator==(const ExactNumber&, const ExactNumber&) = default;

 private:
  std::variant<Rational, Surd, Float> v_;
};

// Canonical (a + b*sqrt(d))/c for any integers with c != 0, d >= 0. Square
// factors of d are pulled into b; collapses to Rational when the radical
// vanishes.
ExactNumber make_quadratic(BigInt a, BigInt b, BigInt c, BigInt d);

ExactNumber operator+(const ExactNumber& a, const ExactNumber& b);
ExactNumber operator-(const ExactNumber& a, const ExactNumber& b);
ExactNumber operator*(const ExactNumber& a, const ExactNumber& b);
ExactNumber operator/(const ExactNumber& a, const ExactNumber& b);
ExactNumber operator-(const ExactNumber& a);
ExactNumber abs(const ExactNumber& v);

BigInt floor_of(const ExactNumber& v);
ExactNumber reciprocal(const ExactNumber& v);
// Exact for Rational/Surd pairs (mixed radicals are separated by interval
// refinement; they are never equal). Float operands need disjoint intervals
// or coinciding points, otherwise AmbiguousComparison.
std::strong_ordering compare(const ExactNumber& v, const ExactNumber& w);

// Interval enclosure at `prec` bits (a Float operand keeps its own bounds).
Float enclose(const ExactNumber& v, Precision prec);
// Nearest MPFR approximation; the midpoint for Float.
Real approx(const ExactNumber& v, Precision prec);
// Precision of a Float operand, `fallback` for exact values.
Precision working_precision(const ExactNumber& v, Precision fallback);

// g = (sqrt(5) - 1)/2
ExactNumber golden_conjugate();

}  // namespace alphacf
