#include "dtomo/dicke_scheme.hpp"

#include <cmath>
#include <map>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "dtomo/errors.hpp"

namespace dtomo {

namespace {

constexpr double kSeriesCutoff = 1e-4;
constexpr double kResidueTol = 1e-10;

void require_j(int j) {
  if (j < 1) fail(ErrorKind::InvalidArgument, "j must be a positive integer, got " + std::to_string(j));
}

const SpinRep& spin_rep(int j) {
  thread_local std::map<int, SpinRep> cache;
  auto it = cache.find(j);
  if (it == cache.end()) it = cache.emplace(j, SpinRep(2 * j)).first;
  return it->second;
}

const Eigen::MatrixXcd& jy_eigenvectors(int j) {
  thread_local std::map<int, Eigen::MatrixXcd> cache;
  auto it = cache.find(j);
  if (it == cache.end()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(spin_rep(j).jy());
    it = cache.emplace(j, es.eigenvectors()).first;
  }
  return it->second;
}

// sqrt((l-m)!/(l+m)!) P_l^m(x) for m >= 0, with s = sqrt(1 - x^2) supplied
// as sin(phi) so the result is entire in phi.
cplx normalized_legendre(int l, int m, cplx x, cplx s) {
  cplx q_mm = 1.0;
  for (int k = 1; k <= m; ++k) q_mm *= -s * std::sqrt((2.0 * k - 1) / (2.0 * k));
  if (l == m) return q_mm;
  cplx prev = q_mm;
  cplx cur = x * std::sqrt(2.0 * m + 1) * q_mm;
  for (int ll = m + 1; ll < l; ++ll) {
    const cplx next = ((2.0 * ll + 1) * x * cur - std::sqrt(double(ll + m) * (ll - m)) * prev) /
                      std::sqrt(double(ll + 1 - m) * (ll + 1 + m));
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class F>
double even_in_phi2(F f, double phi2) {
  if (std::abs(phi2) >= kSeriesCutoff) return f(phi2);
  const double h = kSeriesCutoff;
  const double f1 = f(h), f2 = f(2 * h);
  const double f0 = (4 * f1 - f2) / 3;
  return f0 + (f1 - f0) / (h * h) * phi2 * phi2;
}

template <class F>
double odd_in_phi2(F f, double phi2) {
  if (std::abs(phi2) >= kSeriesCutoff) return f(phi2);
  const double h = kSeriesCutoff;
  const double f1 = f(h), f2 = f(2 * h);
  const double d1 = (8 * f1 - f2) / (6 * h);
  const double d3 = (f1 - d1 * h) / (h * h * h);
  return d1 * phi2 + d3 * phi2 * phi2 * phi2;
}

double jj1(int j) { return double(j) * (j + 1); }

// <Jy> / sinh(2 phi2), even in phi2; j(j+1)/2 at phi2 = 0
double rho(int j, double phi2) {
  return even_in_phi2([j](double p) { return jy_ratio(j, p) * std::sqrt(jj1(j)) / std::sinh(2 * p); },
                      phi2);
}

double direct_inv_var_phi1(int j, const ComplexPhase& phi) {
  const auto [a, b] = jz2_derivatives(j, phi);
  if (a == 0.0) return 0.0;
  const auto [jy, jy2] = jy_moments(j, phi.phi2);
  const double c = 2 * (jy2 - jy * jy);
  const DenseMoments dm = dense_moments(spin_rep(j), dicke_state(j, phi));
  const double num = dm.v(0, 0) + b * b * var_phi2(j, phi.phi2) - 2 * (b / c) * dm.v(0, 1);
  if (!(num > 0.0)) fail(ErrorKind::DivergentVariance, "non-positive error-propagation numerator");
  return a * a / num;
}

}  // namespace

int dicke_j_from_qubits(int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "Dicke probe needs N >= 2, got " + std::to_string(n));
  if (n % 2 != 0) fail(ErrorKind::HalfIntegerJ, "odd N gives half-integer j; use the matrix path");
  return n / 2;
}

cplx wigner_m0(int j, int m, cplx phi) {
  require_j(j);
  if (std::abs(m) > j) fail(ErrorKind::InvalidArgument, "|m| must not exceed j");
  const int am = std::abs(m);
  const cplx w = normalized_legendre(j, am, std::cos(phi), std::sin(phi));
  return (m < 0 && am % 2 == 1) ? -w : w;
}

Eigen::VectorXcd wigner_column(int j, cplx phi) {
  require_j(j);
  const cplx x = std::cos(phi), s = std::sin(phi);
  Eigen::VectorXcd col(2 * j + 1);
  for (int m = 0; m <= j; ++m) {
    const cplx w = normalized_legendre(j, m, x, s);
    col[j - m] = w;
    col[j + m] = (m % 2 == 1) ? -w : w;
  }
  return col;
}

Eigen::VectorXcd dicke_state(int j, const ComplexPhase& phi) {
  Eigen::VectorXcd col = wigner_column(j, phi.value());
  return col / col.norm();
}

double jy_ratio(int j, double phi2) {
  require_j(j);
  const cplx beta{0.0, 2 * phi2};
  const cplx r = kI * wigner_m0(j, 1, beta) / wigner_m0(j, 0, beta);
  if (std::abs(r.imag()) > kResidueTol * std::max(1.0, std::abs(r.real()))) {
    fail(ErrorKind::ComplexResidue, "<Jy> has an imaginary residue");
  }
  return r.real();
}

std::pair<double, double> jy_moments(int j, double phi2) {
  const double root = std::sqrt(jj1(j));
  const double jy = jy_ratio(j, phi2) * root;
  const double r_coth = even_in_phi2([j](double p) { return jy_ratio(j, p) / std::tanh(2 * p); }, phi2);
  return {jy, jj1(j) - r_coth * root};
}

double var_phi2(int j, double phi2) {
  const auto [jy, jy2] = jy_moments(j, phi2);
  return 1.0 / (4 * (jy2 - jy * jy));
}

std::pair<double, double> jz_moments(int j, const ComplexPhase& phi) {
  const double jz2 = rho(j, phi.phi2) / 2 * (std::cosh(2 * phi.phi2) - std::cos(2 * phi.phi1));
  const Eigen::VectorXcd col = wigner_column(j, phi.value());
  double num = 0, den = 0;
  for (int k = 0; k <= 2 * j; ++k) {
    const double m = j - k;
    const double p = std::norm(col[k]);
    num += m * m * m * m * p;
    den += p;
  }
  return {jz2, num / den};
}

std::pair<double, double> jz2_derivatives(int j, const ComplexPhase& phi) {
  const double d1 = std::sin(2 * phi.phi1) * rho(j, phi.phi2);
  const double c2 = std::cos(2 * phi.phi1);
  const double root = std::sqrt(jj1(j));
  auto closed = [&](double p) {
    const double r = jy_ratio(j, p);
    const double sh = std::sinh(2 * p), ch = std::cosh(2 * p);
    return jj1(j) * (1 - r * r) * (ch / sh - c2 / sh) + r * root * ((2 * c2 * ch - 2) / (sh * sh) - 1);
  };
  return {d1, odd_in_phi2(closed, phi.phi2)};
}

DenseMoments dense_moments(const SpinRep& rep, const Eigen::VectorXcd& psi) {
  const Eigen::MatrixXcd jz2_op = rep.jz() * rep.jz();
  const Eigen::VectorXcd a = jz2_op * psi;
  const Eigen::VectorXcd y = rep.jy() * psi;
  DenseMoments out;
  out.jy = psi.dot(y).real();
  out.jy2 = y.squaredNorm();
  out.jz2 = psi.dot(a).real();
  out.jz4 = a.squaredNorm();
  const double cross = a.dot(y).real() - out.jz2 * out.jy;
  out.v << out.jz4 - out.jz2 * out.jz2, cross, cross, out.jy2 - out.jy * out.jy;
  return out;
}

CovarianceReport dicke_covariance(int j, const ComplexPhase& phi) {
  const auto [a, b] = jz2_derivatives(j, phi);
  const auto [jy, jy2] = jy_moments(j, phi.phi2);
  Jacobian2x2 jac;
  jac << a, b, 0.0, 2 * (jy2 - jy * jy);
  return invert_error_propagation(jac, dense_moments(spin_rep(j), dicke_state(j, phi)).v);
}

double inv_var_phi1(int j, const ComplexPhase& phi) {
  require_j(j);
  if (std::abs(phi.phi1) >= 1e-3 || std::abs(phi.phi2) >= kSeriesCutoff) {
    return direct_inv_var_phi1(j, phi);
  }
  const double nodes[3] = {1e-3, 2e-3, 4e-3};
  double x[3], f[3];
  for (int k = 0; k < 3; ++k) {
    x[k] = nodes[k] * nodes[k];
    f[k] = direct_inv_var_phi1(j, {nodes[k], phi.phi2});
  }
  const double t = phi.phi1 * phi.phi1;
  double quad = 0;
  for (int k = 0; k < 3; ++k) {
    double w = 1;
    for (int l = 0; l < 3; ++l) {
      if (l != k) w *= (t - x[l]) / (x[k] - x[l]);
    }
    quad += w * f[k];
  }
  const double lin = f[0] + (f[1] - f[0]) / (x[1] - x[0]) * (t - x[0]);
  if (!std::isfinite(quad) || std::abs(quad - lin) > 1e-3 * std::abs(quad)) {
    fail(ErrorKind::DivergentVariance, "phi1 -> 0 extrapolation did not settle");
  }
  return quad;
}

double var_phi1(int j, const ComplexPhase& phi) {
  const double inv = inv_var_phi1(j, phi);
  if (!(inv > 0.0) || !std::isfinite(inv)) {
    fail(ErrorKind::DivergentVariance, "phi1 is not estimable at this working point");
  }
  return 1.0 / inv;
}

double legendre_recurrence_check(int j, double phi2) {
  if (j < 2) fail(ErrorKind::InvalidArgument, "recurrence check needs j >= 2");
  if (phi2 == 0.0) fail(ErrorKind::InvalidArgument, "recurrence check needs phi2 != 0");
  const cplx beta{0.0, 2 * phi2};
  const double jd = j;
  const cplx p0 = wigner_m0(j, 0, beta);
  const cplx p1 = wigner_m0(j, 1, beta) * std::sqrt(jd * (jd + 1));
  const cplx p2 = wigner_m0(j, 2, beta) * std::sqrt((jd + 2) * (jd + 1) * jd * (jd - 1));
  const cplx cot = std::cos(beta) / std::sin(beta);
  const cplx t0 = jd * (jd + 1) * p0, t1 = 2.0 * cot * p1;
  const double scale = std::abs(p2) + std::abs(t1) + std::abs(t0);
  return std::abs(p2 + t1 + t0) / scale;
}

ComplexPhase estimate_dicke_phase(double mean_jz2, double mean_jy, int j) {
  require_j(j);
  if (!(std::abs(mean_jy) < j)) fail(ErrorKind::OutOfDomainMean, "|<Jy>| must be below j");
  const double root = std::sqrt(jj1(j));
  auto g = [&](double p) { return jy_ratio(j, p) * root - mean_jy; };
  const double cap = 300.0 / j;
  double hi = 1.0;
  while (g(hi) < 0 && hi < cap) hi *= 2;
  double lo = -1.0;
  while (g(lo) > 0 && -lo < cap) lo *= 2;
  const double glo = g(lo), ghi = g(hi);
  if (!(glo <= 0 && ghi >= 0)) fail(ErrorKind::OutOfDomainMean, "<Jy> outside the attainable range");
  double phi2 = 0;
  if (glo == 0) {
    phi2 = lo;
  } else if (ghi == 0) {
    phi2 = hi;
  } else {
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi,
                                                           boost::math::tools::eps_tolerance<double>(52), iters);
    phi2 = 0.5 * (bracket.first + bracket.second);
  }
  const double c = std::cosh(2 * phi2) - 2 * mean_jz2 / rho(j, phi2);
  if (!(std::abs(c) <= 1.0)) fail(ErrorKind::OutOfDomainMean, "<Jz^2> inconsistent with the fitted phi2");
  return {std::acos(c) / 2, phi2};
}

ProbabilityModel dicke_jz_model(int j) {
  require_j(j);
  return [j](const ComplexPhase& phi) -> Eigen::VectorXd { return dicke_state(j, phi).cwiseAbs2(); };
}

ProbabilityModel dicke_jy_model(int j) {
  require_j(j);
  return [j](const ComplexPhase& phi) -> Eigen::VectorXd {
    return (jy_eigenvectors(j).adjoint() * dicke_state(j, phi)).cwiseAbs2();
  };
}

FisherMatrix dicke_fisher(int j, const ComplexPhase& phi) {
  return fisher_matrix(dicke_jz_model(j), phi) + fisher_matrix(dicke_jy_model(j), phi);
}

}  // namespace dtomo
