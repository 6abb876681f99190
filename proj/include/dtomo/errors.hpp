#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtomo {

/// Every failure the library can report. Numeric-domain failures are
/// distinguished from configuration failures so the CLI can map them to
/// different exit codes.
enum class ErrorKind {
  ZeroNorm,
  ZeroSum,
  InvalidArgument,
  DegenerateAlphaBeta,
  BranchAmbiguity,
  PoleAtPhase,
  PoleAtGamma,
  SingularTheta,
  SingularJacobian,
  SingularFisher,
  DegenerateDistribution,
  SingularWorkingPoint,
  HalfIntegerJ,
  ComplexResidue,
  DivergentVariance,
  OutOfDomainMean,
  UnsupportedRepresentation,
  Config,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  bool is_config() const noexcept { return kind_ == ErrorKind::Config; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace dtomo
