#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dowker {

enum class Errc {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  DuplicateLabel,
  NotALattice,
  UniverseMismatch,
  TooLarge,
  UnknownLabel,
  NotAFacePair,
  EmptyDowkerComplex,
  NotAComplex,
  NotTotal,
  ParseError,
  DimensionMismatch,
  Exhausted,
  Mismatch,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the witness (pair, subset, line) where one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dowker
