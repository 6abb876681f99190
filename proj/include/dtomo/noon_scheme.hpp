#pragma once

#include <utility>
#include <vector>

#include "dtomo/coupling.hpp"
#include "dtomo/metrology.hpp"

namespace dtomo {

/// Final N-qubit probe state restricted to span{|0...0>, |1...1>}.
struct NoonState {
  int n_qubits = 1;
  cplx amp0;
  cplx amp1;

  Eigen::Vector2cd vec() const { return {amp0, amp1}; }
};

/// (alpha - i beta)^N |0...0> + (alpha + i beta)^N |1...1>, normalized.
/// Powers are taken in log-polar form.
NoonState noon_final_state(const AlphaBeta& ab, int n);

/// e^{-iN phi/2} |0...0> + e^{iN phi/2} |1...1>, normalized.
NoonState noon_final_state(const ComplexPhase& phi, int n);

/// (<M1>, <M2>) = (cos(N phi1)/cosh(N phi2), tanh(N phi2)).
std::pair<double, double> noon_expectations(const ComplexPhase& phi, int n);

/// M1 swaps the two amplitudes, M2 = diag(+1, -1).
std::pair<double, double> noon_dense_expectations(const NoonState& s);

Jacobian2x2 noon_jacobian(const ComplexPhase& phi, int n);
MeasCovariance noon_measurement_covariance(const ComplexPhase& phi, int n);

/// Error-propagation covariance from (M1, M2). Throws SingularJacobian
/// where sin(N phi1) = 0.
CovarianceReport noon_variance(const ComplexPhase& phi, int n);

/// One POVM element restricted to the subspace: [[A, C], [C*, B]].
struct NoonPovmElement {
  double a = 0.0;
  double b = 0.0;
  cplx c;
};

struct NoonPovm {
  std::vector<NoonPovmElement> elements;

  /// Throws InvalidArgument unless sum A = sum B = 1, sum C = 0 and each
  /// block is PSD (1e-12).
  void validate() const;

  /// Projectors onto the +-1 eigenspaces of sigma_x^{(x)N}.
  static NoonPovm parity();
  /// Projectors onto |0...0> and |1...1>.
  static NoonPovm branch();
};

/// gamma = (alpha - i beta)/(alpha + i beta). Throws PoleAtGamma.
cplx gamma_ratio(const AlphaBeta& ab);

/// p_j = [A |gamma|^{2N} + B + 2 Re(C gamma*^N)] / (|gamma|^{2N} + 1),
/// rescaled when |gamma| > 1 so nothing overflows.
Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, cplx gamma, int n);
Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, const AlphaBeta& ab, int n);
/// Direct quadratic form on a constructed state.
Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, const NoonState& s);

ProbabilityModel noon_probability_model(const NoonPovm& povm, int n);

/// FIM of the parity POVM plus that of the branch POVM, each on its own copy.
FisherMatrix noon_fisher(const ComplexPhase& phi, int n);

/// phi2 = artanh(<M2>)/N, phi1 = arccos(<M1> cosh(N phi2))/N in [0, pi/N].
/// Throws OutOfDomainMean.
ComplexPhase estimate_noon_phase(double m1, double m2, int n);

}  // namespace dtomo
