#pragma once

#include <stdexcept>
#include <string>

namespace jumpwalk {

/// Stable error identifiers, also used verbatim in CLI diagnostics.
enum class ErrorCode {
    EMPTY_INPUT,
    NEGATIVE_PROBABILITY,
    SUM_NOT_ONE,
    ORDER_NEGATIVE,
    TRUNCATION_TOO_SMALL,
    NONZERO_REMAINDER,
    NO_CONVERGENCE,
    ZERO_ROOT,
    A4_VIOLATED,
    NO_PSI_ROOTS,
    ZERO_MEAN_JUMP,
    INTEGER_WEIGHT,
    NOT_ASYMPTOTIC,
    CONFIG_INVALID,
};

inline const char* name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EMPTY_INPUT: return "EMPTY_INPUT";
        case ErrorCode::NEGATIVE_PROBABILITY: return "NEGATIVE_PROBABILITY";
        case ErrorCode::SUM_NOT_ONE: return "SUM_NOT_ONE";
        case ErrorCode::ORDER_NEGATIVE: return "ORDER_NEGATIVE";
        case ErrorCode::TRUNCATION_TOO_SMALL: return "TRUNCATION_TOO_SMALL";
        case ErrorCode::NONZERO_REMAINDER: return "NONZERO_REMAINDER";
        case ErrorCode::NO_CONVERGENCE: return "NO_CONVERGENCE";
        case ErrorCode::ZERO_ROOT: return "ZERO_ROOT";
        case ErrorCode::A4_VIOLATED: return "A4_VIOLATED";
        case ErrorCode::NO_PSI_ROOTS: return "NO_PSI_ROOTS";
        case ErrorCode::ZERO_MEAN_JUMP: return "ZERO_MEAN_JUMP";
        case ErrorCode::INTEGER_WEIGHT: return "INTEGER_WEIGHT";
        case ErrorCode::NOT_ASYMPTOTIC: return "NOT_ASYMPTOTIC";
        case ErrorCode::CONFIG_INVALID: return "CONFIG_INVALID";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace jumpwalk
