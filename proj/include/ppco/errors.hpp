#pragma once

#include <stdexcept>
#include <string>

namespace ppco {

enum class ErrorCode {
    DuplicateId,
    UnknownId,
    CycleDetected,
    SelfInteraction,
    UnknownActor,
    UnknownArtifact,
    NoApplicableViewpoint,
    MissingProfile,
    ArtifactBatchNotGranted,
    MalformedXml,
    UnknownElement,
    MissingRequiredField,
    InsufficientAccess,
    UnknownTarget,
    NotConcerned,
    AlreadyVoted,
    NotPending,
    Io,
    ParseError,
    ReferentialIntegrity,
    UsageError,
};

const char* error_name(ErrorCode code);

// All domain operations report failure through this one exception type; the
// code maps 1:1 onto the error vocabulary surfaced by the CLI and the service.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace ppco
