#pragma once
#include <stdexcept>
#include <string>

namespace tlab {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotConvex,
  DegenerateSupport,
  GenerationFailed,
  GridTooCoarse,
  SolveFailed,
  PointOutsideStencil,
  TooCloseToBoundary,
  CrossCheckFailed,
  LeavesConvexCone,
  ConstraintNotMet,
  QuadratureUnderResolved,
  Internal,
};

const char* error_code_name(ErrorCode c);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DegenerateSupport: return "DegenerateSupport";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::PointOutsideStencil: return "PointOutsideStencil";
    case ErrorCode::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::LeavesConvexCone: return "LeavesConvexCone";
    case ErrorCode::ConstraintNotMet: return "ConstraintNotMet";
    case ErrorCode::QuadratureUnderResolved: return "QuadratureUnderResolved";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tlab
