#include "dtomo/tr_scheme.hpp"

#include <cmath>
#include <string>

#include "dtomo/errors.hpp"

namespace dtomo {

namespace {

void require_pairs(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "N must be at least 1, got " + std::to_string(n));
}

}  // namespace

TrPairState tr_final_state(const AlphaBeta& ab, int n) {
  require_pairs(n);
  const cplx a = ab.alpha, b = ab.beta;
  const cplx f0 = (a - kI * b) * (std::conj(a) - kI * std::conj(b));
  const cplx f1 = (a + kI * b) * (std::conj(a) + kI * std::conj(b));
  if (f0 == 0.0 || f1 == 0.0) fail(ErrorKind::DegenerateAlphaBeta, "alpha^2 + beta^2 = 0");
  const cplx l0 = double(n) * std::log(f0);
  const cplx l1 = double(n) * std::log(f1);
  const double top = std::max(l0.real(), l1.real());
  const cplx a0 = std::exp(l0 - top), a1 = std::exp(l1 - top);
  const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
  return {n, a0 / norm, a1 / norm};
}

TrPairState tr_final_state(const ComplexPhase& phi, int n) {
  require_pairs(n);
  const double r = 1 / std::sqrt(2.0);
  return {n, r, std::polar(r, 2.0 * n * phi.phi1)};
}

double modulus_identity_check(cplx a, cplx b) {
  const double lhs = std::abs((a - kI * b) * (std::conj(a) - kI * std::conj(b)));
  const double rhs = std::abs((std::conj(a) + kI * std::conj(b)) * (a + kI * b));
  return std::abs(lhs - rhs);
}

TrPhaseEstimate tr_estimate_phi1(double measured_parity, int n) {
  require_pairs(n);
  if (!(std::abs(measured_parity) <= 1.0)) fail(ErrorKind::OutOfDomainMean, "parity outside [-1, 1]");
  TrPhaseEstimate out{std::acos(measured_parity) / (2.0 * n), std::nullopt};
  if (std::abs(measured_parity) < 1.0) out.variance = 1.0 / (4.0 * n * n);
  return out;
}

double tr_phi1_variance(double phi1, int n) {
  require_pairs(n);
  const double s = std::sin(2.0 * n * phi1), c = std::cos(2.0 * n * phi1);
  if (std::abs(s) < 1e-12) fail(ErrorKind::SingularWorkingPoint, "sin(2N phi1) vanishes");
  return (1 - c * c) / (4.0 * n * n * s * s);
}

}  // namespace dtomo
