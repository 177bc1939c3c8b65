#ifndef CMNET_ERROR_HPP
#define CMNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cmnet {

enum class ErrorKind {
    DivisionByZero,
    ParamsMismatch,
    InvalidParams,
    ZeroDivisor,
    GeneratorNotFound,
    ZeroElement,
    IncompleteSupport,
    NegativeValuation,
    NotIntegral,
    NotOnCurve,
    InvalidCurve,
    InvalidBasePair,
    NonIntegralModel,
    SingularPoint,
    BoundExceeded,
    TorsionCollision,
    DegenerateTransformedPair,
    Precondition,
    NotAnnihilating,
    SingularBase,
    NoDecomposition,
    OddDenominatorValuation,
    OddGValue,
    HypothesisNotMet,
    Parse,
    Config,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cmnet

#endif
