#pragma once

#include <optional>
#include <utility>

#include "dtomo/coupling.hpp"

namespace dtomo {

/// Probabilities of outcome +1 for K, K1, K2 on the post-selected probe,
/// plus the post-selection success probability.
struct ProbTriple {
  double p_k = 0.5;
  double p_k1 = 0.5;
  double p_k2 = 0.5;
  double p_post = 0.0;
};

/// |+> along K1, the default probe input.
Qubit default_pointer_input(Axis k);

double expectation(const Qubit& v, Axis a);

ProbTriple forward_probabilities(const SystemState& s, const CouplingConfig& c, const Qubit& pointer_in);
ProbTriple forward_probabilities(const SystemState& s, const CouplingConfig& c);

/// psi_x = d p_post / (psi~ sin(theta/2)) [(1 - P_K1) tan(theta/4) + P_K2 - 1/2 + i (P_K - 1/2)].
/// Exact for the default probe input.
cplx reconstruct_amplitude(const ProbTriple& p, double theta, double psi_tilde, int d);

/// (<K1>_f, <K>_f) for an input with <K2>_in = <K>_in = 0.
std::pair<double, double> optimal_expectations(const ComplexPhase& phi, double k1_in);

/// Bloch components in the (K1, K2, K) frame.
struct BlochVector {
  double k = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;

  double norm() const;
};

BlochVector bloch_vector(const Qubit& v, Axis k);

/// Rotation of (k1, k2) by phi1 and the hyperbolic shift of k, both over
/// cosh(phi2) + sinh(phi2) k_in.
BlochVector general_expectations(const ComplexPhase& phi, const BlochVector& in);

struct QubitPhaseEstimate {
  ComplexPhase phi;
  /// False when <K2>_f was not supplied and phi1 could be either sign.
  bool sign_resolved = false;
};

/// phi2 = artanh(<K>_f), |phi1| = arccos(<K1>_f cosh(phi2) / k1_in); the sign
/// of phi1 follows <K2>_f when given. Throws OutOfDomainMean.
QubitPhaseEstimate estimate_qubit_phase(double k1_f, double k_f, std::optional<double> k2_f,
                                        double k1_in = 1.0);

}  // namespace dtomo
