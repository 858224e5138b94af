#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcsys {

enum class ErrorCode {
  UnpairedLetter,
  NonOrientable,
  EulerTooLarge,
  MalformedItinerary,
  SurfaceMismatch,
  IndistinguishableStrands,
  NotStabilized,
  DegenerateSystem,
  InvalidSystem,
  DivisibilityError,
  BudgetExceeded,
  TooLarge,
  NotPairwiseIntersecting,
  Precondition,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnpairedLetter: return "UnpairedLetter";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::EulerTooLarge: return "EulerTooLarge";
    case ErrorCode::MalformedItinerary: return "MalformedItinerary";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::IndistinguishableStrands: return "IndistinguishableStrands";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPairwiseIntersecting: return "NotPairwiseIntersecting";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a stable code; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::Precondition, what);
}

}  // namespace arcsys
