#pragma once

#include <stdexcept>
#include <string>

namespace prodring {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedRing,
    InconsistentInput,
    NotUnitIdeal,
    ShapeMismatch,
    ZeroElement,
    NoWitness,
    NotMember,
    NonPositiveValueVector,
    UnsupportedDescriptor,
    InvalidSample,
    FactorizationBudgetExceeded,
    BudgetExceeded,
    InvalidFilter,
    ParseError,
    ValidationError,
    OutOfScope,
};

/// Stable machine name of an error code, as used in reports.
const char* error_code_name(ErrorCode code) noexcept;

/// Base of every error thrown by the library. Carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace prodring
