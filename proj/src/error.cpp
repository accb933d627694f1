#include "dowker/error.hpp"

namespace dowker {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NotALattice: return "NotALattice";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::NotAFacePair: return "NotAFacePair";
    case Errc::EmptyDowkerComplex: return "EmptyDowkerComplex";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::NotTotal: return "NotTotal";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Exhausted: return "Exhausted";
    case Errc::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace dowker
