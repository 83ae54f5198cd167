#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seaweed {

enum class ErrorCode {
    InvalidArgument,
    LengthMismatch,
    UnionNotFull,
    ParseError,
    NotFrobenius,
    Underdetermined,
    Inconsistent,
    NonIntegerSolution,
    PreconditionViolated,
    InternalClosureFailure,
    SingularForm,
    RetryLimitExceeded,
    NonIntegerSpectrum,
    EmptyMultiset,
    UnsupportedFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace seaweed
