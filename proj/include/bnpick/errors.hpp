#pragma once

#include <stdexcept>
#include <string>

namespace bnpick {

enum class ErrorCode {
    NotHermitian,
    Singular,
    ZeroPolynomial,
    BoundaryPole,
    DegenerateDenominator,
    NotInnerRatio,
    DataInvalid,
    SingularPick,
    MuCollidesWithNode,
    AtPole,
    OnDiagonalSingularity,
    SingularLeadingBlock,
    PoleAtNode,
    AmbiguousBoundary,
    NotSingular,
    NotPositive,
    PivotFailure,
    RatioInconsistent,
    DataInconsistent,
    NumericalBreakdown,
};

const char* error_code_name(ErrorCode code);

/// Single exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace bnpick
