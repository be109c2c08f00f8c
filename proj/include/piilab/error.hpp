#pragma once

#include <stdexcept>
#include <string>

namespace piilab {

enum class ErrorCode {
    InvalidArgument = 1,
    DivisionByZero,
    IdenticallyZeroDenominator,
    NotPolynomial,
    UnknownVariable,
    Parse,
    NotInLattice,
    Degenerate,
    NotIsometry,
    NotSquarefree,
    RegimeSplit,
    DenominatorVanishes,
    StepFailure,
    NoChart,
    Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace piilab
