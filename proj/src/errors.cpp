#include "dtomo/errors.hpp"

namespace dtomo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::ZeroSum: return "ZeroSum";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateAlphaBeta: return "DegenerateAlphaBeta";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::PoleAtPhase: return "PoleAtPhase";
    case ErrorKind::PoleAtGamma: return "PoleAtGamma";
    case ErrorKind::SingularTheta: return "SingularTheta";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::SingularFisher: return "SingularFisher";
    case ErrorKind::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorKind::SingularWorkingPoint: return "SingularWorkingPoint";
    case ErrorKind::HalfIntegerJ: return "HalfIntegerJ";
    case ErrorKind::ComplexResidue: return "ComplexResidue";
    case ErrorKind::DivergentVariance: return "DivergentVariance";
    case ErrorKind::OutOfDomainMean: return "OutOfDomainMean";
    case ErrorKind::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace dtomo
