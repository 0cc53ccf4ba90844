#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
    PARSE_ERROR,
    NONSIMPLICIAL,
    NONPRIMITIVE_RAY,
    BAD_INTERSECTION,
    NOT_COMPLETE,
    DIM_ERROR,
    OUT_OF_RANGE,
    NOT_IN_SUPPORT,
    UNBOUNDED,
    DIM_MISMATCH,
    NOT_SEMIAMPLE,
    ROUTE_MISMATCH,
    DEGREE_MISMATCH,
    INTERNAL,
    USAGE,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
        case ErrorCode::NONSIMPLICIAL: return "NONSIMPLICIAL";
        case ErrorCode::NONPRIMITIVE_RAY: return "NONPRIMITIVE_RAY";
        case ErrorCode::BAD_INTERSECTION: return "BAD_INTERSECTION";
        case ErrorCode::NOT_COMPLETE: return "NOT_COMPLETE";
        case ErrorCode::DIM_ERROR: return "DIM_ERROR";
        case ErrorCode::OUT_OF_RANGE: return "OUT_OF_RANGE";
        case ErrorCode::NOT_IN_SUPPORT: return "NOT_IN_SUPPORT";
        case ErrorCode::UNBOUNDED: return "UNBOUNDED";
        case ErrorCode::DIM_MISMATCH: return "DIM_MISMATCH";
        case ErrorCode::NOT_SEMIAMPLE: return "NOT_SEMIAMPLE";
        case ErrorCode::ROUTE_MISMATCH: return "ROUTE_MISMATCH";
        case ErrorCode::DEGREE_MISMATCH: return "DEGREE_MISMATCH";
        case ErrorCode::INTERNAL: return "INTERNAL";
        case ErrorCode::USAGE: return "USAGE";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace toric
