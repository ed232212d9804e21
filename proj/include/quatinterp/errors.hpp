#pragma once

#include <stdexcept>
#include <string>

namespace quatinterp {

// Failure modes of the algebraic operations. Every reason has a stable
// machine-readable slug so front ends can report it without string matching
// on messages.
enum class ErrorReason {
    DivisionByZero,
    NotUnisolvent,
    SingularSystem,
    DegenerateConfiguration,
    InvalidPointSet,
    PreconditionViolation,
    DegreeLimit,
};

inline const char* to_slug(ErrorReason r) {
    switch (r) {
    case ErrorReason::DivisionByZero: return "division-by-zero";
    case ErrorReason::NotUnisolvent: return "not-unisolvent";
    case ErrorReason::SingularSystem: return "singular-system";
    case ErrorReason::DegenerateConfiguration: return "degenerate-configuration";
    case ErrorReason::InvalidPointSet: return "invalid-point-set";
    case ErrorReason::PreconditionViolation: return "precondition-violation";
    case ErrorReason::DegreeLimit: return "degree-limit";
    }
    return "unknown";
}

class MathError : public std::runtime_error {
public:
    MathError(ErrorReason reason, const std::string& message)
        : std::runtime_error(message), reason_(reason) {}

    ErrorReason reason() const noexcept { return reason_; }
    const char* reason_slug() const noexcept { return to_slug(reason_); }

private:
    ErrorReason reason_;
};

} // namespace quatinterp
