#pragma once

#include <stdexcept>
#include <string>

namespace oujordan {

enum class ErrorCode {
    NonSquare,
    BadSelection,
    NonSquareSelection,
    ZeroDiagonal,
    DimensionMismatch,
    SingularSystem,
    BadIndex,
    BadRational,
    MismatchWithClosedForm,
    GradeEqualsLevel,
    NotHomogeneous,
    ObstructedRHS,
    VerificationFailed,
    EigenCheckFailed,
    ChainCheckFailed,
    KernelCheckFailed,
    StepMatrixMismatch,
    RankDeficient,
    SumMismatch,
    TheoryMismatch,
    OutOfTheoryScope,
    VertexNotFound,
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

} // namespace oujordan
