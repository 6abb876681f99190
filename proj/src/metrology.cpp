#include "dtomo/metrology.hpp"

#include <algorithm>
#include <cmath>

#include "dtomo/errors.hpp"

namespace dtomo {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::ErrorPropagation: return "error-propagation";
    case Provenance::CramerRao: return "cramer-rao";
    case Provenance::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

bool is_psd(const Eigen::Matrix2d& m, double tol) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

CovarianceReport invert_error_propagation(const Jacobian2x2& j, const MeasCovariance& v) {
  const double scale = j.cwiseAbs().maxCoeff();
  const double det = j.determinant();
  if (!std::isfinite(det) || std::abs(det) <= 1e-12 * scale * scale) {
    fail(ErrorKind::SingularJacobian, "error-propagation Jacobian is singular at this working point");
  }
  const Eigen::Matrix2d inv = j.inverse();
  Eigen::Matrix2d c = inv * v * inv.transpose();
  c = 0.5 * (c + c.transpose()).eval();
  return {c, Provenance::ErrorPropagation};
}

namespace {

Eigen::VectorXd central(const ProbabilityModel& probs, ComplexPhase at, int axis, double h) {
  ComplexPhase up = at, down = at;
  (axis == 0 ? up.phi1 : up.phi2) += h;
  (axis == 0 ? down.phi1 : down.phi2) -= h;
  return (probs(up) - probs(down)) / (2 * h);
}

Eigen::VectorXd refined_derivative(const ProbabilityModel& probs, const ComplexPhase& at, int axis,
                                   double h) {
  return (4.0 * central(probs, at, axis, h / 2) - central(probs, at, axis, h)) / 3.0;
}

}  // namespace

FisherMatrix fisher_matrix(const ProbabilityModel& probs, const ComplexPhase& at, double step) {
  if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "finite-difference step must be positive");
  const Eigen::VectorXd p = probs(at);
  const Eigen::VectorXd d1 = refined_derivative(probs, at, 0, step * std::max(1.0, std::abs(at.phi1)));
  const Eigen::VectorXd d2 = refined_derivative(probs, at, 1, step * std::max(1.0, std::abs(at.phi2)));

  FisherMatrix out;
  int kept = 0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    if (p[k] < kNegligibleProbability) {
      ++out.dropped_outcomes;
      if (std::max(std::abs(d1[k]), std::abs(d2[k])) > 1e-7) ++out.suspicious_drops;
      continue;
    }
    ++kept;
    const Eigen::Vector2d g(d1[k], d2[k]);
    out.f += g * g.transpose() / p[k];
  }
  if (kept <= 1 && out.f.cwiseAbs().maxCoeff() == 0.0) {
    fail(ErrorKind::DegenerateDistribution, "outcome distribution is concentrated on a single outcome");
  }
  out.f = 0.5 * (out.f + out.f.transpose()).eval();
  return out;
}

FisherMatrix operator+(const FisherMatrix& a, const FisherMatrix& b) {
  return {a.f + b.f, a.dropped_outcomes + b.dropped_outcomes, a.suspicious_drops + b.suspicious_drops};
}

CovarianceReport cramer_rao_bound(const FisherMatrix& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(f.f);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo >= 1e12) {
    fail(ErrorKind::SingularFisher, "Fisher information matrix is singular or ill-conditioned");
  }
  Eigen::Matrix2d inv = f.f.inverse();
  inv = 0.5 * (inv + inv.transpose()).eval();
  return {inv, Provenance::CramerRao};
}

Eigen::Matrix2cd complex_block_covariance(const CovarianceReport& c) {
  const double c11 = c.cov(0, 0), c22 = c.cov(1, 1), c12 = c.cov(0, 1);
  const cplx zz{c11 - c22, 2 * c12};
  Eigen::Matrix2cd b;
  b << c11 + c22, zz, std::conj(zz), c11 + c22;
  return b;
}

Eigen::Matrix2d real_covariance_from_block(const Eigen::Matrix2cd& block) {
  const double total = block(0, 0).real();
  const cplx zz = block(0, 1);
  Eigen::Matrix2d c;
  c << (total + zz.real()) / 2, zz.imag() / 2, zz.imag() / 2, (total - zz.real()) / 2;
  return c;
}

bool dominates(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b, double slack) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(a - b);
  return es.eigenvalues().minCoeff() >= -slack;
}

}  // namespace dtomo
