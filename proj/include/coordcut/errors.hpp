#pragma once

#include <stdexcept>
#include <string>

namespace coordcut {

/// Failure classes raised by the solvers. The CLI maps every SolverError to
/// exit code 3, so adding a kind here never changes the exit-code contract.
enum class SolverErrorKind {
    BudgetExceeded,
    NotPropertyA,
    NotPotential,
    NoFiniteCut,
    ClassificationMismatch,
    NotATraversal,
    NoValidXA,
    InvalidThresholds,
};

inline const char* to_string(SolverErrorKind kind) {
    switch (kind) {
        case SolverErrorKind::BudgetExceeded: return "BudgetExceeded";
        case SolverErrorKind::NotPropertyA: return "NotPropertyA";
        case SolverErrorKind::NotPotential: return "NotPotential";
        case SolverErrorKind::NoFiniteCut: return "NoFiniteCut";
        case SolverErrorKind::ClassificationMismatch: return "ClassificationMismatch";
        case SolverErrorKind::NotATraversal: return "NotATraversal";
        case SolverErrorKind::NoValidXA: return "NoValidXA";
        case SolverErrorKind::InvalidThresholds: return "InvalidThresholds";
    }
    return "Unknown";
}

class SolverError : public std::runtime_error {
public:
    SolverError(SolverErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    SolverErrorKind kind() const noexcept { return kind_; }

private:
    SolverErrorKind kind_;
};

/// Structural violation of a graph/instance invariant (self-loop, duplicate arc,
/// dimension mismatch, out-of-range vertex).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace coordcut
