#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqtc {

// Every failure raised by the library carries one of these codes so callers
// (and the verification report) can branch on the kind rather than the text.
enum class Errc {
  NonPrime,
  WeightOutOfRange,
  SignBlockWithOddP,
  AmbientTooSmall,
  NegativeDimension,
  DimensionMismatch,
  NotOnSphere,
  AntipodalPair,
  CoincidentPair,
  ParityMismatch,
  NoFixedPoint,
  NoFixedCircle,
  OutsideCollar,
  NotAFixedPoint,
  OutsideDomain,
  NonCyclicGroup,
  InvalidComplex,
  NonIntegralQuotient,
  EmptyFixedSet,
  InvalidQuery,
  OutOfTheoremScope,
  InconsistentFacts,
  NotRealizable,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::SignBlockWithOddP: return "SignBlockWithOddP";
    case Errc::AmbientTooSmall: return "AmbientTooSmall";
    case Errc::NegativeDimension: return "NegativeDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotOnSphere: return "NotOnSphere";
    case Errc::AntipodalPair: return "AntipodalPair";
    case Errc::CoincidentPair: return "CoincidentPair";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::NoFixedPoint: return "NoFixedPoint";
    case Errc::NoFixedCircle: return "NoFixedCircle";
    case Errc::OutsideCollar: return "OutsideCollar";
    case Errc::NotAFixedPoint: return "NotAFixedPoint";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::NonCyclicGroup: return "NonCyclicGroup";
    case Errc::InvalidComplex: return "InvalidComplex";
    case Errc::NonIntegralQuotient: return "NonIntegralQuotient";
    case Errc::EmptyFixedSet: return "EmptyFixedSet";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::OutOfTheoremScope: return "OutOfTheoremScope";
    case Errc::InconsistentFacts: return "InconsistentFacts";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eqtc
