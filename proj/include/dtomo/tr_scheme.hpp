#pragma once

#include <optional>

#include "dtomo/coupling.hpp"

namespace dtomo {

/// Final state of N probe pairs (one coupled to psi, one to its time
/// reverse) on span{|0...0>, |1...1>} of 2N qubits.
struct TrPairState {
  int n_pairs = 1;
  cplx amp0;
  cplx amp1;

  Eigen::Vector2cd vec() const { return {amp0, amp1}; }
};

/// [(alpha - i beta)(alpha* - i beta*)]^N |0...0> + [(alpha + i beta)(alpha* + i beta*)]^N |1...1>,
/// normalized. Throws DegenerateAlphaBeta.
TrPairState tr_final_state(const AlphaBeta& ab, int n);

/// (|0...0> + e^{2iN phi1} |1...1>)/sqrt(2).
TrPairState tr_final_state(const ComplexPhase& phi, int n);

/// | |(a - ib)(a* - ib*)| - |(a* + ib*)(a + ib)| |.
double modulus_identity_check(cplx a, cplx b);

struct TrPhaseEstimate {
  double phi1 = 0.0;
  /// Per-shot variance; empty where sin(2N phi1) = 0.
  std::optional<double> variance;
};

/// phi1 = arccos(parity)/(2N) in [0, pi/(2N)]. Throws OutOfDomainMean.
TrPhaseEstimate tr_estimate_phi1(double measured_parity, int n);

/// (1 - cos^2(2N phi1)) / (4 N^2 sin^2(2N phi1)). Throws SingularWorkingPoint.
double tr_phi1_variance(double phi1, int n);

}  // namespace dtomo
