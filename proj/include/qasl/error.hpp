#pragma once

#include <stdexcept>
#include <string>

namespace qasl {

/// Error taxonomy shared by all modules. The CLI maps kinds to exit codes:
/// invalid input -> 2, invariant violation -> 3, reconstruction failure -> 4.
enum class ErrorKind {
    InvalidInput,
    BadShape,
    IndexOutOfBounds,
    NotSquare,
    NotComparable,
    DenominatorVanishes,
    NotDistributive,
    RankDeficient,
    InvariantViolation,
    InconsistentParameters,
    NotConfluent,
    WeightViolation,
    ReconstructionFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    const char* kind_name() const noexcept {
        switch (kind_) {
            case ErrorKind::InvalidInput: return "InvalidInput";
            case ErrorKind::BadShape: return "BadShape";
            case ErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
            case ErrorKind::NotSquare: return "NotSquare";
            case ErrorKind::NotComparable: return "NotComparable";
            case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
            case ErrorKind::NotDistributive: return "NotDistributive";
            case ErrorKind::RankDeficient: return "RankDeficient";
            case ErrorKind::InvariantViolation: return "InvariantViolation";
            case ErrorKind::InconsistentParameters: return "InconsistentParameters";
            case ErrorKind::NotConfluent: return "NotConfluent";
            case ErrorKind::WeightViolation: return "WeightViolation";
            case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
        }
        return "Error";
    }

    /// Process exit code for the CLI front end.
    int exit_code() const noexcept {
        switch (kind_) {
            case ErrorKind::InvalidInput:
            case ErrorKind::BadShape:
            case ErrorKind::IndexOutOfBounds:
            case ErrorKind::NotSquare:
            case ErrorKind::NotComparable:
            case ErrorKind::DenominatorVanishes:
                return 2;
            case ErrorKind::ReconstructionFailed:
                return 4;
            default:
                return 3;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace qasl
