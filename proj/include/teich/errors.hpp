#pragma once

#include <string>
#include <stdexcept>

namespace teich {

// Exit-code category of an error. Validation/domain problems are the caller's
// fault; geometric failures are properties of the requested configuration.
enum class ErrorKind { Validation = 2, Geometric = 3 };

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail, ErrorKind kind = ErrorKind::Validation)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)), kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }
  int exitCode() const noexcept { return static_cast<int>(kind_); }

private:
  std::string code_;
  ErrorKind kind_;
};

#define TEICH_DEFINE_ERROR(Name, Kind)                                                             \
  class Name : public Error {                                                                      \
  public:                                                                                          \
    explicit Name(const std::string& detail) : Error(#Name, detail, ErrorKind::Kind) {}            \
  };

TEICH_DEFINE_ERROR(OrientabilityError, Validation)
TEICH_DEFINE_ERROR(EulerError, Validation)
TEICH_DEFINE_ERROR(DegenerateError, Validation)
TEICH_DEFINE_ERROR(IndexError, Validation)
TEICH_DEFINE_ERROR(UnflippableError, Validation)
TEICH_DEFINE_ERROR(EmptyCurveError, Validation)
TEICH_DEFINE_ERROR(AdjacencyError, Validation)
TEICH_DEFINE_ERROR(DomainError, Validation)
TEICH_DEFINE_ERROR(BalanceError, Validation)
TEICH_DEFINE_ERROR(PositivityError, Validation)
TEICH_DEFINE_ERROR(FormatError, Validation)
TEICH_DEFINE_ERROR(GeodesicFlipError, Geometric)
TEICH_DEFINE_ERROR(EllipticHolonomyError, Geometric)
TEICH_DEFINE_ERROR(ParabolicClassError, Geometric)

#undef TEICH_DEFINE_ERROR

// Raised when edge weights leave the admissible cone. Carries the first
// offending face and its triangle-inequality slack (negative or zero).
class AdmissibilityError : public Error {
public:
  AdmissibilityError(int face, double slack, const std::string& detail)
      : Error("AdmissibilityError", detail), face_(face), slack_(slack) {}

  int face() const noexcept { return face_; }
  double slack() const noexcept { return slack_; }

private:
  int face_;
  double slack_;
};

} // namespace teich
