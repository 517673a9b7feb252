#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

// Error kinds that callers are expected to branch on. Everything else is a
// plain invariant violation and surfaces as std::logic_error.
enum class ErrorKind {
    Parse,
    Validation,
    DimensionMismatch,
    NotFiniteDimensionalWithinCap,
    RadicalUncertain,
    IdempotentSplitFailure,
    IsomorphismUndecided,
    NotNakayama,
    NotQuasiResolving,
    CapExceeded,
    IgNotCertified,
    UnknownInstance,
    DimensionTooLarge,
    UnsupportedRing,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Validation: return "Validation";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotFiniteDimensionalWithinCap: return "NotFiniteDimensionalWithinCap";
        case ErrorKind::RadicalUncertain: return "RadicalUncertain";
        case ErrorKind::IdempotentSplitFailure: return "IdempotentSplitFailure";
        case ErrorKind::IsomorphismUndecided: return "IsomorphismUndecided";
        case ErrorKind::NotNakayama: return "NotNakayama";
        case ErrorKind::NotQuasiResolving: return "NotQuasiResolving";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::IgNotCertified: return "IgNotCertified";
        case ErrorKind::UnknownInstance: return "UnknownInstance";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace homcat
