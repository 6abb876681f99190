#pragma once

#include <string_view>
#include <vector>

#include "dtomo/metrology.hpp"
#include "dtomo/sampler.hpp"

namespace dtomo {

enum class Scheme { Qubit, Noon, Dicke, Tr };

std::string_view to_string(Scheme s);
/// Throws Config on an unknown name.
Scheme parse_scheme(std::string_view name);

/// Observables each scheme measures, one independent record per entry.
/// For Tr the M1 record is taken on the TR-pair state and M2 on the plain
/// NOON state.
std::vector<Observable> scheme_observables(Scheme s, Axis pointer_axis = Axis::z);

struct PhaseEstimate {
  ComplexPhase phi;
  /// Shot-noise covariance from first-order propagation of the record means.
  CovarianceReport cov;
};

/// Inverts the scheme's expectation formulas at the empirical means.
/// `n` is the number of probe qubits (pairs for Tr; ignored for Qubit).
/// Throws OutOfDomainMean when a mean leaves the invertible range.
PhaseEstimate empirical_phase_estimate(const std::vector<MeasurementRecord>& records, Scheme scheme,
                                       int n, Axis pointer_axis = Axis::z);

}  // namespace dtomo
