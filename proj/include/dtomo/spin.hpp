#pragma once

#include <Eigen/Dense>

#include "dtomo/types.hpp"

namespace dtomo {

/// Spin-j matrices in the |j, m> basis ordered m = j ... -j.
class SpinRep {
 public:
  explicit SpinRep(int twice_j);

  int twice_j() const { return twice_j_; }
  double j() const { return twice_j_ / 2.0; }
  int dim() const { return twice_j_ + 1; }
  bool integer() const { return twice_j_ % 2 == 0; }
  /// m value of basis index k.
  double m(int k) const { return j() - k; }

  const Eigen::MatrixXcd& jx() const { return jx_; }
  const Eigen::MatrixXcd& jy() const { return jy_; }
  const Eigen::MatrixXcd& jz() const { return jz_; }

 private:
  int twice_j_;
  Eigen::MatrixXcd jx_, jy_, jz_;
};

/// Normalized spin-j state after the complex rotation.
struct DickeState {
  int twice_j = 0;
  Eigen::VectorXcd coefficients;
};

/// Index of the reference state: |j, 0> for integer j, |j, 1/2> otherwise.
int reference_index(const SpinRep& rep);

/// exp(-i phi Jy) |reference>, not normalized. Dense matrix exponential.
Eigen::VectorXcd rotate_unnormalized(const SpinRep& rep, const ComplexPhase& phi);

DickeState rotate_dicke(const SpinRep& rep, const ComplexPhase& phi);

/// <psi|A|psi> for a normalized state; the imaginary part is dropped.
double expect(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& a);

}  // namespace dtomo
