#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace alphacf {

using BigInt = mpz_class;
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;

// Owning MPFR value, round-to-nearest. Binary operations produce a result
// at the larger of the two operand precisions.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_long_double(long double v, Precision prec = kDefaultPrecision);
  static Real from_int(long v, Precision prec = kDefaultPrecision);
  static Real from_mpz(const BigInt& v, Precision prec = kDefaultPrecision);
  static Real from_mpq(const mpq_class& v, Precision prec = kDefaultPrecision);
  // Throws Error(ParseError) on malformed input.
  static Real from_string(const std::string& s, Precision prec = kDefaultPrecision);

  Precision precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  long double to_long_double() const noexcept { return mpfr_get_ld(v_, MPFR_RNDN); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, unsigned long n);
Real log2_const(Precision prec);

}  // namespace alphacf
