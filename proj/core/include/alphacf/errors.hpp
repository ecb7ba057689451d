#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alphacf {

enum class Errc {
  ParseError,
  InvalidArgument,
  DivisionByZero,
  AmbiguousFloor,
  AmbiguousComparison,
  MixedRadical,
  OutOfDomain,
  OutOfRange,
  PrecisionExhausted,
  DivergesAtRational,
  ExpansionTooShort,
  SingularPoint,
  QuadratureFailure,
  DegenerateInterval,
  PoleHit,
};

std::string_view to_string(Errc code) noexcept;

// Every library failure is reported through this type; code() says which
// contract was violated, what() names the offending value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  // The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace alphacf
