#pragma once

// Matched 1/2- and alpha-expansions of the same x for 1/2 <= alpha <= g, the
// denominator difference classification, the t_i and r_i/s_i ladders, and
// integer Mobius maps.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphacf/cf_core.hpp"
#include "alphacf/numkit.hpp"

namespace alphacf {

struct Matrix2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  // Integer inverse; requires det = +-1 (InvalidArgument).
  Matrix2 inverse() const;
  Matrix2 power(unsigned n) const;

  friend Matrix2 operator*(const Matrix2& m, const Matrix2& n);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// (a x + b)/(c x + d) in the arithmetic of x. Requires det = +-1
// (InvalidArgument); PoleHit when c x + d = 0.
ExactNumber mobius_apply(const Matrix2& m, const ExactNumber& x);

struct LadderPoint {
  std::size_t i = 0;
  Rational t;  // t_0 = 1/2, t_i = 1/(3 - t_{i-1})
  BigInt r;    // r_0 = 0, r_i = s_{i-1}
  BigInt s;    // s_0 = 1, s_i = 3 s_{i-1} - r_{i-1}
  Rational rs() const { return Rational(r, s); }
};

LadderPoint ladder(std::size_t i);
std::vector<LadderPoint> ladder_sequence(std::size_t count);

// coincide:  x_j^(1/2) = x_j^(alpha)
// reflected: x_j^(1/2) = 1 - x_j^(alpha)
// shifted:   neither; the orbits are between a reflection and re-coincidence
enum class StepEvent { Coincide, Reflected, Shifted };
std::string to_string(StepEvent e);

struct MatchedStep {
  std::size_t j = 0;
  Digit half;
  Digit alpha;
  ExactNumber x_half;
  ExactNumber x_alpha;
  BigInt q_half;
  BigInt q_alpha;
  StepEvent event = StepEvent::Coincide;
};

struct MatchedTrace {
  ExactNumber x;
  Alpha alpha = Alpha::half();
  std::vector<MatchedStep> steps;          // j = 1 .. length
  std::vector<std::size_t> divergences;    // j with differing digits after a coinciding state
  BigInt q0 = 1;                           // q_0, shared
  bool terminated = false;                 // a rational orbit ended before depth
};

// Requires x in [0, 1/2] (OutOfDomain) and alpha <= g (OutOfRange).
MatchedTrace matched_orbits(const ExactNumber& x, const Alpha& alpha, std::size_t depth);

enum class QClass { Zero, QPrev, Other };

struct QViolation {
  std::size_t j = 0;
  std::string kind;  // "class", "digit", "log_gap", "ordering"
  std::string detail;
};

struct QClassification {
  std::vector<QClass> classes;  // index j - 1
  std::vector<QViolation> violations;
  double max_log_gap = 0;       // max_j |log q_j^(1/2) - log q_j^(alpha)|
};

// Checks per j: q_j^(1/2) - q_j^(alpha) in {0, q_{j-1}^(1/2)}; after a
// nonzero difference the next 1/2-digit is (3,-1) or (2,+1);
// max(q) <= 2 min(q). Where the difference is nonzero also
// q_j^(alpha) >= q_j^(1/2) - q_{j-1}^(1/2) >= q_{j-1}^(1/2) ("ordering"; the
// second inequality can fail at zero-difference steps, e.g. x = 39/100, j = 2).
QClassification q_difference_classify(const MatchedTrace& trace);

nlohmann::ordered_json to_json(const MatchedStep& step);

}  // namespace alphacf
