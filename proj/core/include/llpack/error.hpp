#ifndef LLPACK_ERROR_HPP
#define LLPACK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace llpack {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    ZeroInput,
    TrivialCharacter,
    CapExceeded,
    ZeroConstantTerm,
    SignDomain,
    Domain,
    NotSupported,
    NotTypicallySymmetric,
    Shape,
    Inconsistent,
    InternalInconsistency,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::TrivialCharacter: return "TrivialCharacter";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::SignDomain: return "SignDomain";
        case ErrorCode::Domain: return "Domain";
        case ErrorCode::NotSupported: return "NotSupported";
        case ErrorCode::NotTypicallySymmetric: return "NotTypicallySymmetric";
        case ErrorCode::Shape: return "Shape";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// One entry of a validation report. Validators collect these instead of throwing.
struct Violation {
    ErrorCode code;
    std::string message;
};

using Violations = std::vector<Violation>;

}  // namespace llpack

#endif
