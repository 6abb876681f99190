#include "dtomo/noon_scheme.hpp"

#include <cmath>
#include <string>

#include "dtomo/errors.hpp"

namespace dtomo {

namespace {

void require_qubits(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "N must be at least 1, got " + std::to_string(n));
}

NoonState from_logs(int n, cplx log0, cplx log1) {
  const double top = std::max(log0.real(), log1.real());
  cplx a0 = std::exp(log0 - top);
  cplx a1 = std::exp(log1 - top);
  const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
  return {n, a0 / norm, a1 / norm};
}

}  // namespace

NoonState noon_final_state(const AlphaBeta& ab, int n) {
  require_qubits(n);
  const cplx minus = ab.alpha - kI * ab.beta;
  const cplx plus = ab.alpha + kI * ab.beta;
  if (minus == 0.0 && plus == 0.0) fail(ErrorKind::DegenerateAlphaBeta, "alpha = beta = 0");
  if (minus == 0.0) return {n, 0.0, std::polar(1.0, n * std::arg(plus))};
  if (plus == 0.0) return {n, std::polar(1.0, n * std::arg(minus)), 0.0};
  return from_logs(n, double(n) * std::log(minus), double(n) * std::log(plus));
}

NoonState noon_final_state(const ComplexPhase& phi, int n) {
  require_qubits(n);
  const cplx half = kI * double(n) * phi.value() / 2.0;
  return from_logs(n, -half, half);
}

std::pair<double, double> noon_expectations(const ComplexPhase& phi, int n) {
  require_qubits(n);
  return {std::cos(n * phi.phi1) / std::cosh(n * phi.phi2), std::tanh(n * phi.phi2)};
}

std::pair<double, double> noon_dense_expectations(const NoonState& s) {
  return {2 * (std::conj(s.amp0) * s.amp1).real(), std::norm(s.amp0) - std::norm(s.amp1)};
}

Jacobian2x2 noon_jacobian(const ComplexPhase& phi, int n) {
  require_qubits(n);
  const double x = n * phi.phi1, y = n * phi.phi2;
  const double ch = std::cosh(y), sh = std::sinh(y);
  Jacobian2x2 j;
  j << -n * std::sin(x) / ch, -n * std::cos(x) * sh / (ch * ch),
       0.0, n / (ch * ch);
  return j;
}

MeasCovariance noon_measurement_covariance(const ComplexPhase& phi, int n) {
  const auto [m1, m2] = noon_expectations(phi, n);
  MeasCovariance v;
  // {M1, M2} = 0 on the subspace, so the symmetrized cross moment is -<M1><M2>.
  v << 1 - m1 * m1, -m1 * m2,
       -m1 * m2, 1 - m2 * m2;
  return v;
}

CovarianceReport noon_variance(const ComplexPhase& phi, int n) {
  return invert_error_propagation(noon_jacobian(phi, n), noon_measurement_covariance(phi, n));
}

void NoonPovm::validate() const {
  constexpr double tol = 1e-12;
  if (elements.empty()) fail(ErrorKind::InvalidArgument, "POVM has no elements");
  double sa = 0, sb = 0;
  cplx sc = 0;
  for (const auto& e : elements) {
    if (e.a < -tol || e.b < -tol || e.a * e.b - std::norm(e.c) < -tol) {
      fail(ErrorKind::InvalidArgument, "POVM element is not positive semi-definite");
    }
    sa += e.a;
    sb += e.b;
    sc += e.c;
  }
  if (std::abs(sa - 1) > tol || std::abs(sb - 1) > tol || std::abs(sc) > tol) {
    fail(ErrorKind::InvalidArgument, "POVM elements do not sum to the identity on the subspace");
  }
}

NoonPovm NoonPovm::parity() { return {{{0.5, 0.5, 0.5}, {0.5, 0.5, -0.5}}}; }

NoonPovm NoonPovm::branch() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}}; }

cplx gamma_ratio(const AlphaBeta& ab) {
  const cplx plus = ab.alpha + kI * ab.beta;
  if (std::abs(plus) <= 1e-14 * (std::abs(ab.alpha) + std::abs(ab.beta))) {
    fail(ErrorKind::PoleAtGamma, "alpha + i beta vanishes");
  }
  return (ab.alpha - kI * ab.beta) / plus;
}

Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, cplx gamma, int n) {
  require_qubits(n);
  povm.validate();
  const double g = std::abs(gamma);
  if (g == 0.0) {
    Eigen::VectorXd p(povm.elements.size());
    for (std::size_t k = 0; k < povm.elements.size(); ++k) p[k] = povm.elements[k].b;
    return p;
  }
  const double log_g2n = 2.0 * n * std::log(g);
  const cplx gamma_n_conj = std::exp(double(n) * std::log(std::conj(gamma)));
  Eigen::VectorXd p(povm.elements.size());
  for (std::size_t k = 0; k < povm.elements.size(); ++k) {
    const auto& e = povm.elements[k];
    if (g <= 1.0) {
      const double w = std::exp(log_g2n);
      p[k] = (e.a * w + e.b + 2 * (e.c * gamma_n_conj).real()) / (w + 1);
    } else {
      // divide through by |gamma|^{2N}: gamma*^N / |gamma|^{2N} = 1/gamma^N
      const double w = std::exp(-log_g2n);
      const cplx inv_gamma_n = std::exp(-double(n) * std::log(gamma));
      p[k] = (e.a + e.b * w + 2 * (e.c * inv_gamma_n).real()) / (1 + w);
    }
  }
  return p;
}

Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, const AlphaBeta& ab, int n) {
  return noon_povm_probabilities(povm, gamma_ratio(ab), n);
}

Eigen::VectorXd noon_povm_probabilities(const NoonPovm& povm, const NoonState& s) {
  povm.validate();
  Eigen::VectorXd p(povm.elements.size());
  for (std::size_t k = 0; k < povm.elements.size(); ++k) {
    const auto& e = povm.elements[k];
    p[k] = e.a * std::norm(s.amp0) + e.b * std::norm(s.amp1) +
           2 * (e.c * std::conj(s.amp0) * s.amp1).real();
  }
  return p;
}

ProbabilityModel noon_probability_model(const NoonPovm& povm, int n) {
  return [povm, n](const ComplexPhase& phi) {
    return noon_povm_probabilities(povm, std::exp(-kI * phi.value()), n);
  };
}

FisherMatrix noon_fisher(const ComplexPhase& phi, int n) {
  return fisher_matrix(noon_probability_model(NoonPovm::parity(), n), phi) +
         fisher_matrix(noon_probability_model(NoonPovm::branch(), n), phi);
}

ComplexPhase estimate_noon_phase(double m1, double m2, int n) {
  require_qubits(n);
  if (!(std::abs(m2) < 1.0)) fail(ErrorKind::OutOfDomainMean, "|<M2>| must be below 1");
  const double phi2 = std::atanh(m2) / n;
  const double c = m1 * std::cosh(n * phi2);
  if (!(std::abs(c) <= 1.0)) fail(ErrorKind::OutOfDomainMean, "<M1> cosh(N phi2) outside [-1, 1]");
  return {std::acos(c) / n, phi2};
}

}  // namespace dtomo
