#pragma once

// alpha-continued fractions, alpha in [1/2, 1].
//
// The map is A(x) = |1/x - floor(1/x - alpha + 1)| on (0, alpha]. Each step
// emits a digit (a, eps) with eps = sign(1/x - a); alpha = 1 is the Gauss map
// and alpha = 1/2 the nearest-integer continued fraction. Branch boundaries
// are half-open: x in (1/(k+alpha), 1/k] gives a = k.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphacf/numkit.hpp"

namespace alphacf {

class Alpha {
 public:
  // Exact Rational or Surd in [1/2, 1]; throws OutOfDomain otherwise.
  explicit Alpha(ExactNumber value);
  static Alpha parse(std::string_view text);

  static Alpha half();
  static Alpha one();
  static Alpha golden();  // (sqrt(5)-1)/2

  const ExactNumber& value() const noexcept { return value_; }
  long double approx() const noexcept { return approx_; }
  bool is_one() const;
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Alpha& a, const Alpha& b) { return a.value_ == b.value_; }

 private:
  ExactNumber value_;
  long double approx_;
};

struct Digit {
  BigInt a;
  int eps = 1;  // +1 or -1

  friend bool operator==(const Digit&, const Digit&) = default;
};

struct StepResult {
  Digit digit;
  ExactNumber next;
  bool terminal = false;  // 1/x was an integer, next == 0
};

// One application of A_alpha. Requires 0 < x <= alpha (OutOfDomain).
// A terminal step records eps = +1.
StepResult alpha_step(const ExactNumber& x, const Alpha& alpha);

struct Period {
  std::size_t preperiod = 0;
  std::size_t length = 0;

  friend bool operator==(const Period&, const Period&) = default;
};

struct CFExpansion {
  Alpha alpha = Alpha::one();
  ExactNumber x0;
  std::vector<Digit> digits;         // digits[j-1] = (a_j, eps_j)
  std::vector<ExactNumber> orbit;    // orbit[j] = x_j, size digits.size() + 1
  bool terminated = false;           // some x_r == 0
  std::optional<Period> period;      // Surd inputs only
  bool precision_exhausted = false;  // Float orbit stopped at a branch boundary

  std::size_t length() const noexcept { return digits.size(); }
};

enum class OnAmbiguity { Throw, Truncate };

// Expand x in [0, alpha] for up to max_steps digits. Stops early at
// termination or, for Surd inputs, at the first repeated orbit state. A Float
// orbit straddling a branch boundary raises PrecisionExhausted, or with
// OnAmbiguity::Truncate returns the prefix with precision_exhausted set.
CFExpansion expand(const ExactNumber& x, const Alpha& alpha, std::size_t max_steps,
                   OnAmbiguity on_ambiguity = OnAmbiguity::Throw);

// A periodic expansion extended to at least `steps` digits by repeating its
// period; other expansions are returned unchanged.
CFExpansion unrolled(const CFExpansion& e, std::size_t steps);

// p_j, q_j and |q_j x - p_j| for j = -1 .. length. Index 0 holds j = -1.
struct ConvergentSeq {
  std::vector<BigInt> p;
  std::vector<BigInt> q;
  std::vector<ExactNumber> betas;

  std::size_t size() const noexcept { return q.size(); }
  const BigInt& p_at(long j) const { return p.at(static_cast<std::size_t>(j + 1)); }
  const BigInt& q_at(long j) const { return q.at(static_cast<std::size_t>(j + 1)); }
  const ExactNumber& beta_at(long j) const { return betas.at(static_cast<std::size_t>(j + 1)); }
};

// p_j = a_j p_{j-1} + eps_{j-1} p_{j-2}, seeds (p_{-1}, q_{-1}) = (1, 0),
// (p_0, q_0) = (0, 1), eps_0 = +1.
ConvergentSeq convergents(const CFExpansion& e);

// beta_{-1} = 1, beta_j = beta_{j-1} * x_j for j = 0..n (returned index 0 is j = -1).
// Requires n <= e.length(); throws ExpansionTooShort otherwise.
std::vector<ExactNumber> beta_products(const CFExpansion& e, std::size_t n);

struct Normalized {
  ExactNumber x;
  bool reflected = false;
};

// Reduce y mod 1 into [0, 1); values above alpha are reflected to 1 - t.
// The reflected value is computed as (floor(y) + 1) - y so it is bitwise the
// same enclosure alpha_step produces for Float inputs.
Normalized normalize(const ExactNumber& y, const Alpha& alpha);

nlohmann::ordered_json to_json(const CFExpansion& e);

}  // namespace alphacf
