#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

enum class ErrorCode {
    LoopEdge,
    ParallelEdge,
    AsymmetricAdjacency,
    Disconnected,
    UnknownFace,
    UnknownElement,
    OuterFaceUnset,
    SBad,
    AlreadyColored,
    InvalidPrecoloring,
    NotAForest,
    TooLarge,
    SurgeryCreatesLoopOrParallel,
    EmptyResidual,
    NegativeEvenShare,
    OuterTooLarge,
    GenerationStalled,
    FormatError,
    InternalInvariant,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal consistency check; violations are bugs, not user errors.
inline void require_internal(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::InternalInvariant, what);
}

} // namespace dpc
