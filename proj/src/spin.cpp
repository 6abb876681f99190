#include "dtomo/spin.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "dtomo/errors.hpp"

namespace dtomo {

SpinRep::SpinRep(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 1) fail(ErrorKind::InvalidArgument, "spin must be at least 1/2, got 2j = " + std::to_string(twice_j));
  const int d = dim();
  const double jj = j();
  Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(d, d);
  jz_ = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double mk = m(k);
    jz_(k, k) = mk;
    if (k > 0) raise(k - 1, k) = std::sqrt(jj * (jj + 1) - mk * (mk + 1));
  }
  const Eigen::MatrixXcd lower = raise.adjoint();
  jx_ = (raise + lower) / 2.0;
  jy_ = (raise - lower) / (2.0 * kI);
}

int reference_index(const SpinRep& rep) { return rep.twice_j() / 2; }

Eigen::VectorXcd rotate_unnormalized(const SpinRep& rep, const ComplexPhase& phi) {
  const Eigen::MatrixXcd gen = -kI * phi.value() * rep.jy();
  const Eigen::MatrixXcd u = gen.exp();
  return u.col(reference_index(rep));
}

DickeState rotate_dicke(const SpinRep& rep, const ComplexPhase& phi) {
  Eigen::VectorXcd v = rotate_unnormalized(rep, phi);
  return {rep.twice_j(), v / v.norm()};
}

double expect(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& a) {
  return psi.dot(a * psi).real();
}

}  // namespace dtomo
