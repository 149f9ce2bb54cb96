#pragma once

#include <stdexcept>
#include <string>

namespace nk {

enum class ErrorCode {
  MalformedFile,
  InvolutionViolation,
  OrientationViolation,
  NonManifoldVertex,
  NotMaterial,
  NotIdeal,
  IncompatibleQuads,
  NotLinkable,
  DegenerateResult,
  ClosedSurface,
  NotZeroEfficient,
  NotSeparatingVertices,
  EmptyX,
  NotCrushable,
  NotSupported,
  NotClosedLink,
  InflationFailed,
  ResourceLimit,
  Unsupported,
  EfficiencyFailure,
  Internal,
};

inline const char* errorCodeName(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::InvolutionViolation: return "InvolutionViolation";
    case ErrorCode::OrientationViolation: return "OrientationViolation";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::NotMaterial: return "NotMaterial";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::IncompatibleQuads: return "IncompatibleQuads";
    case ErrorCode::NotLinkable: return "NotLinkable";
    case ErrorCode::DegenerateResult: return "DegenerateResult";
    case ErrorCode::ClosedSurface: return "ClosedSurface";
    case ErrorCode::NotZeroEfficient: return "NotZeroEfficient";
    case ErrorCode::NotSeparatingVertices: return "NotSeparatingVertices";
    case ErrorCode::EmptyX: return "EmptyX";
    case ErrorCode::NotCrushable: return "NotCrushable";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::NotClosedLink: return "NotClosedLink";
    case ErrorCode::InflationFailed: return "InflationFailed";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EfficiencyFailure: return "EfficiencyFailure";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nk
