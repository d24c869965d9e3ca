#pragma once

#include <stdexcept>
#include <string>

namespace hankelspec {

// Machine-readable failure codes, one per rejection path across the library.
enum class ErrorCode {
    InterlacingViolation,
    ZeroEntry,
    Overflow,
    IndexOutOfRange,
    ZeroSigma,
    ToleranceExceeded,
    NonGeneric,
    PhaseInstability,
    VanishingPairing,
    NoConvergence,
    DenominatorRootInDisc,
    NormalizationError,
    Inconclusive,
    NearPole,
    SingularSystem,
    TrivialKernelCase,
    TruncationTooShort,
    BadInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hankelspec
