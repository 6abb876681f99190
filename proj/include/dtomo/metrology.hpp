#pragma once

#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "dtomo/types.hpp"

namespace dtomo {

enum class Provenance { ErrorPropagation, CramerRao, MonteCarlo };

std::string_view to_string(Provenance p);

/// 2x2 covariance of the (phi1, phi2) estimators.
struct CovarianceReport {
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  Provenance provenance = Provenance::ErrorPropagation;
};

/// Jacobian rows are observables, columns are (phi1, phi2).
using Jacobian2x2 = Eigen::Matrix2d;
/// Symmetrized measurement covariance <{dM_mu, dM_nu}>/2.
using MeasCovariance = Eigen::Matrix2d;

bool is_psd(const Eigen::Matrix2d& m, double tol = 1e-10);

/// Solves V = J C J^T for C. Throws SingularJacobian when
/// |det J| <= 1e-12 max|J_ij|^2.
CovarianceReport invert_error_propagation(const Jacobian2x2& j, const MeasCovariance& v);

/// Outcome probabilities as a function of the complex phase.
using ProbabilityModel = std::function<Eigen::VectorXd(const ComplexPhase&)>;

struct FisherMatrix {
  Eigen::Matrix2d f = Eigen::Matrix2d::Zero();
  int dropped_outcomes = 0;
  /// Dropped outcomes whose probability still moves (|dp| > 1e-7).
  int suspicious_drops = 0;
};

inline constexpr double kFisherStep = 1e-5;
inline constexpr double kNegligibleProbability = 1e-14;

/// F_mn = sum_j dp_j/dphi_m dp_j/dphi_n / p_j with central differences,
/// Richardson-refined once. The step is scaled by max(1, |phi_i|).
FisherMatrix fisher_matrix(const ProbabilityModel& probs, const ComplexPhase& at,
                           double step = kFisherStep);

/// Sum of the FIMs of measurements made on independent copies.
FisherMatrix operator+(const FisherMatrix& a, const FisherMatrix& b);

/// F^-1, tagged as a lower bound. Throws SingularFisher when F is not
/// positive definite or its condition number reaches 1e12.
CovarianceReport cramer_rao_bound(const FisherMatrix& f);

/// [[<dZ dZ*>, <dZ dZ>], [<dZ* dZ*>, <dZ* dZ>]] for Z = X + iY.
Eigen::Matrix2cd complex_block_covariance(const CovarianceReport& c);

/// Inverse of complex_block_covariance.
Eigen::Matrix2d real_covariance_from_block(const Eigen::Matrix2cd& block);

/// True when a - b is PSD, allowing `slack` on each eigenvalue.
bool dominates(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b, double slack = 0.0);

}  // namespace dtomo
