#include "piilab/error.hpp"

namespace piilab {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
        case ErrorCode::NotPolynomial: return "NotPolynomial";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::NotInLattice: return "NotInLattice";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotIsometry: return "NotIsometry";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::RegimeSplit: return "RegimeSplit";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::StepFailure: return "StepFailure";
        case ErrorCode::NoChart: return "NoChart";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace piilab
