#include "bnpick/errors.hpp"

namespace bnpick {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BoundaryPole: return "BoundaryPole";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::NotInnerRatio: return "NotInnerRatio";
        case ErrorCode::DataInvalid: return "DataInvalid";
        case ErrorCode::SingularPick: return "SingularPick";
        case ErrorCode::MuCollidesWithNode: return "MuCollidesWithNode";
        case ErrorCode::AtPole: return "AtPole";
        case ErrorCode::OnDiagonalSingularity: return "OnDiagonalSingularity";
        case ErrorCode::SingularLeadingBlock: return "SingularLeadingBlock";
        case ErrorCode::PoleAtNode: return "PoleAtNode";
        case ErrorCode::AmbiguousBoundary: return "AmbiguousBoundary";
        case ErrorCode::NotSingular: return "NotSingular";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::PivotFailure: return "PivotFailure";
        case ErrorCode::RatioInconsistent: return "RatioInconsistent";
        case ErrorCode::DataInconsistent: return "DataInconsistent";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    }
    return "UnknownError";
}

}  // namespace bnpick
