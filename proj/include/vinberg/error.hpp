#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vinberg {

enum class ErrorCode {
  InvalidForm,
  DimensionMismatch,
  ZeroVector,
  NotAChamber,
  InvalidAngle,
  NotAffine,
  NotIsotropic,
  NotIntegral,
  GramMismatch,
  SingularBasis,
  NotACorner,
  PolygonNotClosed,
  MalformedCertificate,
  UnknownFormat,
  InvalidBudget,
  InternalConsistency,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Structured error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vinberg
