#include "gsh/error.hpp"

namespace gsh {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::MalformedGraph: return "MalformedGraph";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonEffectiveCanonicalDivisor: return "NonEffectiveCanonicalDivisor";
    case Errc::NonPositiveLength: return "NonPositiveLength";
    case Errc::GenusZero: return "GenusZero";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::SplitOutOfRange: return "SplitOutOfRange";
    case Errc::ProfileInterpolationMismatch: return "ProfileInterpolationMismatch";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::BadParameters: return "BadParameters";
    case Errc::WrongGenus: return "WrongGenus";
    case Errc::EliminableVerticesPresent: return "EliminableVerticesPresent";
    case Errc::InconsistentOrd: return "InconsistentOrd";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::NotInSiegelSpace: return "NotInSiegelSpace";
    case Errc::TruncationRadiusExceeded: return "TruncationRadiusExceeded";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::UnsupportedCurve: return "UnsupportedCurve";
    case Errc::BasisCountMismatch: return "BasisCountMismatch";
    case Errc::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case Errc::RankDeficientCycles: return "RankDeficientCycles";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::MissingField: return "MissingField";
    case Errc::FieldConflict: return "FieldConflict";
  }
  return "Unknown";
}

}  // namespace gsh
