#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spherekit {

enum class ErrorCode {
    DuplicateLabel,
    NonMaximalFacet,
    TooManyVertices,
    UnknownLabel,
    NotAFace,
    LabelCollision,
    BadParameters,
    NotAnEdge,
    NotContractible,
    NotPure,
    KOutOfRange,
    EmbeddingMismatch,
    ZeroStress,
    DegenerateCoordinates,
    BadAValue,
    NotAStress,
    HypothesisViolated,
    GenericityFailure,
    VerificationFailed,
    TheoremViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Precondition failures carry one of the input-facing codes; VerificationFailed,
// TheoremViolation and GenericityFailure indicate that an exact post-hoc check
// did not hold.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    // True for codes that signal an internal verification or theorem failure
    // rather than bad input.
    bool is_internal() const noexcept {
        return code_ == ErrorCode::VerificationFailed || code_ == ErrorCode::TheoremViolation;
    }

private:
    ErrorCode code_;
};

}  // namespace spherekit
