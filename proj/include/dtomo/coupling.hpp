#pragma once

#include "dtomo/statekit.hpp"
#include "dtomo/types.hpp"

namespace dtomo {

/// System-probe coupling exp(-i theta |x><x| (x) K/2) with K = sigma_z or sigma_y.
struct CouplingConfig {
  double theta = kPi / 2;
  int target_x = 1;  ///< 1-based basis index
  Axis pointer_axis = Axis::z;

  /// Throws InvalidArgument unless 0 < theta <= pi, 1 <= target_x <= dim and
  /// the axis is z or y.
  void validate(int dim) const;
};

/// Post-selected probe operator alpha I - i beta K (up to normalization).
struct AlphaBeta {
  cplx alpha;
  cplx beta;
};

AlphaBeta alpha_beta(const SystemState& s, const CouplingConfig& c);

/// phi with cos(phi/2) = alpha/r and sin(phi/2) = beta/r, r = sqrt(alpha^2 + beta^2)
/// on the principal sheet; the sign of r is flipped when needed so that
/// Re(phi/2) lies in (-pi/2, pi/2].
ComplexPhase phase_from_alpha_beta(const AlphaBeta& ab);

/// Inverse map from the complex phase back to the amplitude psi_x.
cplx psi_from_phase(const ComplexPhase& phi, double psi_tilde, double theta);

/// exp(-i phi K/2) = cos(phi/2) I - i sin(phi/2) K, valid for complex phi because K^2 = I.
Eigen::Matrix2cd complex_rotation(const ComplexPhase& phi, Axis k);

/// (alpha I - i beta K)|in>, not normalized. Its squared norm is the
/// post-selection probability when |in> is normalized.
Qubit unnormalized_pointer_state(const AlphaBeta& ab, const Qubit& pointer_in, Axis k);

/// Normalized probe state after post-selection, built from (alpha, beta).
Qubit final_pointer_state(const AlphaBeta& ab, const Qubit& pointer_in, Axis k);

/// The same state built from the complex rotation exp(-i phi K/2); equal to
/// the (alpha, beta) construction up to a global phase.
Qubit final_pointer_state(const ComplexPhase& phi, const Qubit& pointer_in, Axis k);

}  // namespace dtomo
