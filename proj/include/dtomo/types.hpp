#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace dtomo {

using cplx = std::complex<double>;
using Qubit = Eigen::Vector2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// phi = phi1 + i phi2. phi1 is a rotation angle (radians); phi2 is a
/// dimensionless hyperbolic angle.
struct ComplexPhase {
  double phi1 = 0.0;
  double phi2 = 0.0;

  cplx value() const { return {phi1, phi2}; }
  static ComplexPhase from(cplx z) { return {z.real(), z.imag()}; }
};

/// Probe qubit operators. The probe coupling uses one of z or y.
enum class Axis { x, y, z };

Eigen::Matrix2cd pauli(Axis axis);

/// The two axes perpendicular to `k`, ordered so that (K1, K2, K) is
/// right-handed: z -> (x, y), y -> (z, x), x -> (y, z).
struct PerpendicularAxes {
  Axis k1;
  Axis k2;
};
PerpendicularAxes perpendicular(Axis k);

/// Equality of two qubit (or two-level subspace) vectors up to a global phase.
double global_phase_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace dtomo
