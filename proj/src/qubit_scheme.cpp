#include "dtomo/qubit_scheme.hpp"

#include <algorithm>
#include <cmath>

#include "dtomo/errors.hpp"

namespace dtomo {

Qubit default_pointer_input(Axis k) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(pauli(perpendicular(k).k1));
  Qubit v = es.eigenvectors().col(1);
  // fix the global phase so the first nonzero component is real and positive
  const Eigen::Index lead = std::abs(v[0]) > 1e-12 ? 0 : 1;
  return v * std::polar(1.0, -std::arg(v[lead]));
}

double expectation(const Qubit& v, Axis a) {
  return (v.adjoint() * pauli(a) * v)(0, 0).real() / v.squaredNorm();
}

ProbTriple forward_probabilities(const SystemState& s, const CouplingConfig& c, const Qubit& pointer_in) {
  const AlphaBeta ab = alpha_beta(s, c);
  const Qubit raw = unnormalized_pointer_state(ab, pointer_in.normalized(), c.pointer_axis);
  const Qubit f = final_pointer_state(ab, pointer_in.normalized(), c.pointer_axis);
  const auto axes = perpendicular(c.pointer_axis);
  return {(1 + expectation(f, c.pointer_axis)) / 2, (1 + expectation(f, axes.k1)) / 2,
          (1 + expectation(f, axes.k2)) / 2, raw.squaredNorm()};
}

ProbTriple forward_probabilities(const SystemState& s, const CouplingConfig& c) {
  return forward_probabilities(s, c, default_pointer_input(c.pointer_axis));
}

cplx reconstruct_amplitude(const ProbTriple& p, double theta, double psi_tilde, int d) {
  if (!(psi_tilde > 0.0)) fail(ErrorKind::InvalidArgument, "psi~ must be positive");
  if (d < 2) fail(ErrorKind::InvalidArgument, "dimension must be at least 2");
  const double s = std::sin(theta / 2);
  if (!(std::abs(s) > 1e-12)) fail(ErrorKind::SingularTheta, "sin(theta/2) vanishes");
  const double re = (1 - p.p_k1) * std::tan(theta / 4) + p.p_k2 - 0.5;
  const double im = p.p_k - 0.5;
  return d * p.p_post / (psi_tilde * s) * cplx{re, im};
}

std::pair<double, double> optimal_expectations(const ComplexPhase& phi, double k1_in) {
  return {std::cos(phi.phi1) / std::cosh(phi.phi2) * k1_in, std::tanh(phi.phi2)};
}

double BlochVector::norm() const { return std::sqrt(k * k + k1 * k1 + k2 * k2); }

BlochVector bloch_vector(const Qubit& v, Axis k) {
  const auto axes = perpendicular(k);
  return {expectation(v, k), expectation(v, axes.k1), expectation(v, axes.k2)};
}

BlochVector general_expectations(const ComplexPhase& phi, const BlochVector& in) {
  const double ch = std::cosh(phi.phi2), sh = std::sinh(phi.phi2);
  const double denom = ch + sh * in.k;
  const double c = std::cos(phi.phi1), s = std::sin(phi.phi1);
  return {(sh + ch * in.k) / denom, (c * in.k1 - s * in.k2) / denom, (s * in.k1 + c * in.k2) / denom};
}

QubitPhaseEstimate estimate_qubit_phase(double k1_f, double k_f, std::optional<double> k2_f,
                                        double k1_in) {
  if (!(std::abs(k_f) < 1.0)) fail(ErrorKind::OutOfDomainMean, "|<K>_f| must be below 1");
  if (!(k1_in > 0.0)) fail(ErrorKind::InvalidArgument, "<K1>_in must be positive");
  const double phi2 = std::atanh(k_f);
  const double c = k1_f * std::cosh(phi2) / k1_in;
  if (!(std::abs(c) <= 1.0)) fail(ErrorKind::OutOfDomainMean, "<K1>_f cosh(phi2) / <K1>_in outside [-1, 1]");
  double phi1 = std::acos(c);
  if (k2_f && *k2_f < 0) phi1 = -phi1;
  return {{phi1, phi2}, k2_f.has_value()};
}

}  // namespace dtomo
