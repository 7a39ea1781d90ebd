#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace refltk {

/// Error codes carried by every refltk::Error. Each failure mode named in the
/// module contracts has its own code so callers (and the CLI) can dispatch on it.
enum class ErrorCode {
  InvalidForm,            // gram matrix not symmetric
  SingularGram,           // gram matrix with zero determinant
  DimensionError,         // vector/matrix sizes do not match
  FieldMismatch,          // mixing Q(sqrt d) and Q(sqrt d') with d != d'
  DivisionByZero,         // exact division by zero scalar
  IsotropicVector,        // b(v,v) = 0, reflection undefined
  IsotropicGenerator,     // group-spec generator with b(v,v) = 0
  OrderCapExceeded,       // closure grew past the configured cap
  NotASubset,             // conjugacy partition asked for elements outside W
  NotARoot,               // vector is not on a root line of the group
  UnknownType,            // invalid named Coxeter datum
  InsufficientExpansion,  // series too short to peel degrees
  ParseError,             // malformed group-spec document or scalar literal
  Internal,               // invariant violated; indicates a bug
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::IsotropicGenerator: return "IsotropicGenerator";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::InsufficientExpansion: return "InsufficientExpansion";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace refltk
