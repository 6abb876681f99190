#pragma once

#include <utility>

#include "dtomo/metrology.hpp"
#include "dtomo/spin.hpp"

namespace dtomo {

/// Integer spin j = N/2 of an even-N Dicke probe. Throws HalfIntegerJ for odd N.
int dicke_j_from_qubits(int n);

/// W^{(j)}_{m0}(phi) = sqrt((j-m)!/(j+m)!) P_j^m(cos phi), Condon-Shortley phase,
/// for complex phi. Throws InvalidArgument unless |m| <= j.
cplx wigner_m0(int j, int m, cplx phi);

/// W_{m0} for m = j ... -j (the SpinRep basis order).
Eigen::VectorXcd wigner_column(int j, cplx phi);

/// Normalized e^{-i phi Jy}|j,0> built from the Legendre column.
Eigen::VectorXcd dicke_state(int j, const ComplexPhase& phi);

/// r(phi2) = i W_10(2i phi2) / W_00(2i phi2); throws ComplexResidue if the
/// imaginary part exceeds 1e-10.
double jy_ratio(int j, double phi2);

/// (<Jy>, <Jy^2>) from the closed forms.
std::pair<double, double> jy_moments(int j, double phi2);

/// (Delta phi2)^2 = 1 / (4 Var(Jy)).
double var_phi2(int j, double phi2);

/// (<Jz^2>, <Jz^4>): closed form for <Jz^2>, Legendre column sum for <Jz^4>.
std::pair<double, double> jz_moments(int j, const ComplexPhase& phi);

/// (d<Jz^2>/dphi1, d<Jz^2>/dphi2), closed forms.
std::pair<double, double> jz2_derivatives(int j, const ComplexPhase& phi);

/// Moments of a normalized spin state, with the symmetrized cross term
/// V12 = <{dJz^2, dJy}>/2.
struct DenseMoments {
  double jy = 0, jy2 = 0, jz2 = 0, jz4 = 0;
  Eigen::Matrix2d v = Eigen::Matrix2d::Zero();  ///< covariance of (Jz^2, Jy)
};
DenseMoments dense_moments(const SpinRep& rep, const Eigen::VectorXcd& psi);

/// Error-propagation covariance of (phi1, phi2) from (Jz^2, Jy).
/// Throws SingularJacobian where d<Jz^2>/dphi1 = 0.
CovarianceReport dicke_covariance(int j, const ComplexPhase& phi);

/// 1/(Delta phi1)^2. Near the origin (|phi1| < 1e-3, |phi2| < 1e-4) the 0/0
/// limit is taken by extrapolation in phi1^2 from phi1 = 1e-3, 2e-3, 4e-3.
/// Elsewhere on phi1 = 0 it is 0.
double inv_var_phi1(int j, const ComplexPhase& phi);

/// (Delta phi1)^2. Throws DivergentVariance where the inverse vanishes.
double var_phi1(int j, const ComplexPhase& phi);

/// Relative residual of P^2 + 2 cot(b) P^1 + j(j+1) P^0 = 0 at b = 2i phi2.
double legendre_recurrence_check(int j, double phi2);

/// phi2 from <Jy> by monotone root finding, then
/// cos(2 phi1) = cosh(2 phi2) - 2 <Jz^2> sinh(2 phi2) / <Jy>, phi1 in [0, pi/2].
/// Throws OutOfDomainMean.
ComplexPhase estimate_dicke_phase(double mean_jz2, double mean_jy, int j);

/// Outcome distributions of Jz (m = j..-j) and Jy (ascending eigenvalues).
ProbabilityModel dicke_jz_model(int j);
ProbabilityModel dicke_jy_model(int j);

/// FIM(Jz) + FIM(Jy), one copy each.
FisherMatrix dicke_fisher(int j, const ComplexPhase& phi);

}  // namespace dtomo
