#include "dpcolor/errors.hpp"

namespace dpc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::ParallelEdge: return "ParallelEdge";
        case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownFace: return "UnknownFace";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::OuterFaceUnset: return "OuterFaceUnset";
        case ErrorCode::SBad: return "SBad";
        case ErrorCode::AlreadyColored: return "AlreadyColored";
        case ErrorCode::InvalidPrecoloring: return "InvalidPrecoloring";
        case ErrorCode::NotAForest: return "NotAForest";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SurgeryCreatesLoopOrParallel: return "SurgeryCreatesLoopOrParallel";
        case ErrorCode::EmptyResidual: return "EmptyResidual";
        case ErrorCode::NegativeEvenShare: return "NegativeEvenShare";
        case ErrorCode::OuterTooLarge: return "OuterTooLarge";
        case ErrorCode::GenerationStalled: return "GenerationStalled";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "UnknownError";
}

} // namespace dpc
