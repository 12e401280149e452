#include "ppco/errors.hpp"

namespace ppco {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::SelfInteraction: return "SelfInteraction";
        case ErrorCode::UnknownActor: return "UnknownActor";
        case ErrorCode::UnknownArtifact: return "UnknownArtifact";
        case ErrorCode::NoApplicableViewpoint: return "NoApplicableViewpoint";
        case ErrorCode::MissingProfile: return "MissingProfile";
        case ErrorCode::ArtifactBatchNotGranted: return "ArtifactBatchNotGranted";
        case ErrorCode::MalformedXml: return "MalformedXml";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::MissingRequiredField: return "MissingRequiredField";
        case ErrorCode::InsufficientAccess: return "InsufficientAccess";
        case ErrorCode::UnknownTarget: return "UnknownTarget";
        case ErrorCode::NotConcerned: return "NotConcerned";
        case ErrorCode::AlreadyVoted: return "AlreadyVoted";
        case ErrorCode::NotPending: return "NotPending";
        case ErrorCode::Io: return "Io";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ReferentialIntegrity: return "ReferentialIntegrity";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

}  // namespace ppco
