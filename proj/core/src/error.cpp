#include "cmnet/error.hpp"

namespace cmnet {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParamsMismatch: return "ParamsMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::GeneratorNotFound: return "GeneratorNotFound";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::IncompleteSupport: return "IncompleteSupport";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::InvalidBasePair: return "InvalidBasePair";
    case ErrorKind::NonIntegralModel: return "NonIntegralModel";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::TorsionCollision: return "TorsionCollision";
    case ErrorKind::DegenerateTransformedPair: return "DegenerateTransformedPair";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::NotAnnihilating: return "NotAnnihilating";
    case ErrorKind::SingularBase: return "SingularBase";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::OddDenominatorValuation: return "OddDenominatorValuation";
    case ErrorKind::OddGValue: return "OddGValue";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Config: return "Config";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what)
    , kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace cmnet
