#include "seaweed/errors.hpp"

namespace seaweed {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::UnionNotFull: return "UnionNotFull";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotFrobenius: return "NotFrobenius";
        case ErrorCode::Underdetermined: return "Underdetermined";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InternalClosureFailure: return "InternalClosureFailure";
        case ErrorCode::SingularForm: return "SingularForm";
        case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
        case ErrorCode::NonIntegerSpectrum: return "NonIntegerSpectrum";
        case ErrorCode::EmptyMultiset: return "EmptyMultiset";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    }
    return "Unknown";
}

}  // namespace seaweed
