#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agdmm {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  InvalidArgument,
  FieldTooLarge,
  DivisionByZero,
  FieldNotMatchingU,
  DimensionMismatch,
  FieldMismatch,
  RankDeficient,
  Inconsistent,
  DuplicateRoots,
  GcdViolation,
  UnsupportedDegreeGap,
  PlaceNotEvaluable,
  SchemeCurveMismatch,
  NotFriendly,
  IndivisibleDimensions,
  TooFewPlaces,
  InsufficientResponses,
  ConfigInvalid,
  DecodeFailed,
};

inline std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldNotMatchingU: return "FieldNotMatchingU";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::DuplicateRoots: return "DuplicateRoots";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::UnsupportedDegreeGap: return "UnsupportedDegreeGap";
    case ErrorCode::PlaceNotEvaluable: return "PlaceNotEvaluable";
    case ErrorCode::SchemeCurveMismatch: return "SchemeCurveMismatch";
    case ErrorCode::NotFriendly: return "NotFriendly";
    case ErrorCode::IndivisibleDimensions: return "IndivisibleDimensions";
    case ErrorCode::TooFewPlaces: return "TooFewPlaces";
    case ErrorCode::InsufficientResponses: return "InsufficientResponses";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::DecodeFailed: return "DecodeFailed";
  }
  return "Unknown";
}

}  // namespace agdmm
