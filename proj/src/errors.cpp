#include "prodring/errors.hpp"

namespace prodring {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UnsupportedRing: return "UnsupportedRing";
        case ErrorCode::InconsistentInput: return "InconsistentInput";
        case ErrorCode::NotUnitIdeal: return "NotUnitIdeal";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NoWitness: return "NoWitness";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::NonPositiveValueVector: return "NonPositiveValueVector";
        case ErrorCode::UnsupportedDescriptor: return "UnsupportedDescriptor";
        case ErrorCode::InvalidSample: return "InvalidSample";
        case ErrorCode::FactorizationBudgetExceeded: return "FactorizationBudgetExceeded";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidFilter: return "InvalidFilter";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::OutOfScope: return "OutOfScope";
    }
    return "Unknown";
}

}  // namespace prodring
