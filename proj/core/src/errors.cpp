#include "alphacf/errors.hpp"

namespace alphacf {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AmbiguousFloor: return "AmbiguousFloor";
    case Errc::AmbiguousComparison: return "AmbiguousComparison";
    case Errc::MixedRadical: return "MixedRadical";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::DivergesAtRational: return "DivergesAtRational";
    case Errc::ExpansionTooShort: return "ExpansionTooShort";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::PoleHit: return "PoleHit";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace alphacf
