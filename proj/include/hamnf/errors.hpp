#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamnf {

/// Every failure the engine can raise. The kind decides the CLI exit code.
enum class ErrorKind {
    // input / usage (exit 2)
    ParseError,
    ValidationError,
    DimensionMismatch,
    NonHomogeneous,
    SingularMatrix,
    SingularGenerator,
    ClosureExceeded,
    InconsistentSigns,
    NonMultiplicativeCharacter,
    InvalidArgument,
    // violated mathematical hypotheses (exit 3)
    NotHamiltonianMatrix,
    SNotSymplectic,
    NotSemisymplectic,
    SigmaMismatch,
    SymmetryHypothesisFailed,
    NonEquilibriumInput,
    // failed runtime certificates (exit 4)
    ComplementCertificateFailed,
    DecompositionCertificateFailed,
    EquivariantSolveFailed,
    HomologicalSolveFailed,
};

enum class ErrorFamily { Input = 2, Hypothesis = 3, Certificate = 4 };

constexpr ErrorFamily family_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotHamiltonianMatrix:
    case ErrorKind::SNotSymplectic:
    case ErrorKind::NotSemisymplectic:
    case ErrorKind::SigmaMismatch:
    case ErrorKind::SymmetryHypothesisFailed:
    case ErrorKind::NonEquilibriumInput:
        return ErrorFamily::Hypothesis;
    case ErrorKind::ComplementCertificateFailed:
    case ErrorKind::DecompositionCertificateFailed:
    case ErrorKind::EquivariantSolveFailed:
    case ErrorKind::HomologicalSolveFailed:
        return ErrorFamily::Certificate;
    default:
        return ErrorFamily::Input;
    }
}

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    ErrorFamily family() const noexcept { return family_of(kind_); }
    int exit_code() const noexcept { return static_cast<int>(family()); }

private:
    ErrorKind kind_;
};

inline std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::ClosureExceeded: return "ClosureExceeded";
    case ErrorKind::InconsistentSigns: return "InconsistentSigns";
    case ErrorKind::NonMultiplicativeCharacter: return "NonMultiplicativeCharacter";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHamiltonianMatrix: return "NotHamiltonianMatrix";
    case ErrorKind::SNotSymplectic: return "SNotSymplectic";
    case ErrorKind::NotSemisymplectic: return "NotSemisymplectic";
    case ErrorKind::SigmaMismatch: return "SigmaMismatch";
    case ErrorKind::SymmetryHypothesisFailed: return "SymmetryHypothesisFailed";
    case ErrorKind::NonEquilibriumInput: return "NonEquilibriumInput";
    case ErrorKind::ComplementCertificateFailed: return "ComplementCertificateFailed";
    case ErrorKind::DecompositionCertificateFailed: return "DecompositionCertificateFailed";
    case ErrorKind::EquivariantSolveFailed: return "EquivariantSolveFailed";
    case ErrorKind::HomologicalSolveFailed: return "HomologicalSolveFailed";
    }
    return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition)
        fail(kind, message);
}

} // namespace hamnf
