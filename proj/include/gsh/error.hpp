#pragma once

#include <stdexcept>
#include <string>

namespace gsh {

/// Failure categories raised by the library. Every operation documents which
/// of these it can produce; callers can switch on `Error::code()`.
enum class Errc {
  ParseError,
  MalformedGraph,
  Disconnected,
  NonEffectiveCanonicalDivisor,
  NonPositiveLength,
  GenusZero,
  UnknownVertex,
  UnknownEdge,
  SplitOutOfRange,
  ProfileInterpolationMismatch,
  GenusTooSmall,
  BadParameters,
  WrongGenus,
  EliminableVerticesPresent,
  InconsistentOrd,
  OddCharacteristic,
  NotInSiegelSpace,
  TruncationRadiusExceeded,
  NotSymplectic,
  SingularDenominator,
  DegenerateParameter,
  UnsupportedCurve,
  BasisCountMismatch,
  QuadratureNonConvergence,
  RankDeficientCycles,
  SymmetryViolation,
  NotPositiveDefinite,
  MissingField,
  FieldConflict,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gsh
