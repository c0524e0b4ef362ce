#include "spherekit/error.hpp"

namespace spherekit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::NonMaximalFacet: return "NonMaximalFacet";
        case ErrorCode::TooManyVertices: return "TooManyVertices";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::LabelCollision: return "LabelCollision";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::NotContractible: return "NotContractible";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::EmbeddingMismatch: return "EmbeddingMismatch";
        case ErrorCode::ZeroStress: return "ZeroStress";
        case ErrorCode::DegenerateCoordinates: return "DegenerateCoordinates";
        case ErrorCode::BadAValue: return "BadAValue";
        case ErrorCode::NotAStress: return "NotAStress";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::GenericityFailure: return "GenericityFailure";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace spherekit
