#include "dtomo/coupling.hpp"

#include <cmath>
#include <string>

#include "dtomo/errors.hpp"

namespace dtomo {

namespace {

constexpr double kDegenerate = 1e-14;

void require_nondegenerate(const AlphaBeta& ab) {
  const double scale = std::norm(ab.alpha) + std::norm(ab.beta);
  if (scale == 0.0) fail(ErrorKind::BranchAmbiguity, "alpha = beta = 0 leaves the phase undefined");
  if (std::abs(ab.alpha * ab.alpha + ab.beta * ab.beta) <= kDegenerate * scale) {
    fail(ErrorKind::DegenerateAlphaBeta, "alpha^2 + beta^2 = 0");
  }
}

Qubit normalized(const Qubit& v) {
  const double n = v.norm();
  if (!(n > 0.0)) fail(ErrorKind::DegenerateAlphaBeta, "post-selected probe state vanishes");
  return v / n;
}

}  // namespace

void CouplingConfig::validate(int dim) const {
  if (!(theta > 0.0 && theta <= kPi)) {
    fail(ErrorKind::InvalidArgument, "theta must lie in (0, pi], got " + std::to_string(theta));
  }
  if (target_x < 1 || target_x > dim) {
    fail(ErrorKind::InvalidArgument,
         "target_x must lie in 1.." + std::to_string(dim) + ", got " + std::to_string(target_x));
  }
  if (pointer_axis == Axis::x) fail(ErrorKind::InvalidArgument, "pointer axis must be z or y");
}

AlphaBeta alpha_beta(const SystemState& s, const CouplingConfig& c) {
  c.validate(s.dim());
  const double root_d = std::sqrt(static_cast<double>(s.dim()));
  const cplx psi_x = s.amplitude(c.target_x);
  const double half = c.theta / 2;
  AlphaBeta ab{(tilde_psi(s) - psi_x + psi_x * std::cos(half)) / root_d,
               psi_x * std::sin(half) / root_d};
  require_nondegenerate(ab);
  return ab;
}

ComplexPhase phase_from_alpha_beta(const AlphaBeta& ab) {
  require_nondegenerate(ab);
  const cplx r = std::sqrt(ab.alpha * ab.alpha + ab.beta * ab.beta);
  // w = exp(i phi/2)
  cplx w = (ab.alpha + kI * ab.beta) / r;
  const double half_angle = std::arg(w);
  if (half_angle <= -kPi / 2 || half_angle > kPi / 2) w = -w;
  return {2.0 * std::arg(w), -2.0 * std::log(std::abs(w))};
}

cplx psi_from_phase(const ComplexPhase& phi, double psi_tilde, double theta) {
  if (!(theta > 0.0 && theta <= kPi)) {
    fail(ErrorKind::InvalidArgument, "theta must lie in (0, pi], got " + std::to_string(theta));
  }
  const cplx half = phi.value() / 2.0;
  const cplx c = std::cos(half);
  const cplx s = std::sin(half);
  const double c4 = std::cos(theta / 4);
  const double s4 = std::sin(theta / 4);
  // tan(phi/2) form multiplied through by cos(phi/2) so phi = pi stays finite.
  const cplx denom = 2.0 * s4 * (c4 * c + s4 * s);
  if (std::abs(denom) <= 1e-14 * (std::abs(c) + std::abs(s))) {
    fail(ErrorKind::PoleAtPhase, "cos(theta/4) + sin(theta/4) tan(phi/2) vanishes");
  }
  return psi_tilde * s / denom;
}

Eigen::Matrix2cd complex_rotation(const ComplexPhase& phi, Axis k) {
  const cplx half = phi.value() / 2.0;
  return std::cos(half) * Eigen::Matrix2cd::Identity() - kI * std::sin(half) * pauli(k);
}

Qubit unnormalized_pointer_state(const AlphaBeta& ab, const Qubit& pointer_in, Axis k) {
  return (ab.alpha * Eigen::Matrix2cd::Identity() - kI * ab.beta * pauli(k)) * pointer_in;
}

Qubit final_pointer_state(const AlphaBeta& ab, const Qubit& pointer_in, Axis k) {
  require_nondegenerate(ab);
  return normalized(unnormalized_pointer_state(ab, pointer_in, k));
}

Qubit final_pointer_state(const ComplexPhase& phi, const Qubit& pointer_in, Axis k) {
  return normalized(complex_rotation(phi, k) * pointer_in);
}

}  // namespace dtomo
