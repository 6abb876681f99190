#include <gtest/gtest.h>

#include <cmath>

#include "dtomo/dicke_scheme.hpp"
#include "dtomo/errors.hpp"
#include "test_util.hpp"

namespace dtomo {
namespace {

double slice_closed_form(int j, double phi1) {
  const double jj = double(j) * (j + 1);
  const double t = std::tan(phi1);
  return 8 * jj / ((jj - 2) * t * t + 4);
}

TEST(SpinRep, CommutationRelations) {
  for (int twice_j : {1, 2, 3, 8, 25, 50}) {
    const SpinRep rep(twice_j);
    const auto& x = rep.jx();
    const auto& y = rep.jy();
    const auto& z = rep.jz();
    EXPECT_LT((x * y - y * x - kI * z).norm(), 1e-10);
    EXPECT_LT((y * z - z * y - kI * x).norm(), 1e-10);
    EXPECT_LT((z * x - x * z - kI * y).norm(), 1e-10);
    for (int k = 0; k < rep.dim(); ++k) EXPECT_EQ(z(k, k).real(), rep.m(k));
  }
}

TEST(RotateDicke, IdentityAndImaginaryAngle) {
  const SpinRep rep(6);
  const auto s = rotate_dicke(rep, {0, 0});
  EXPECT_NEAR(std::abs(s.coefficients[3] - 1.0), 0, 1e-15);
  EXPECT_NEAR(s.coefficients.norm(), 1.0, 1e-15);

  const double phi2 = 0.35;
  const Eigen::VectorXcd raw = rotate_unnormalized(rep, {0, phi2});
  // <j,0|e^{2 phi2 Jy}|j,0> = W_00(2i phi2)
  EXPECT_NEAR(raw.squaredNorm(), wigner_m0(3, 0, cplx(0, 2 * phi2)).real(), 1e-12);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_NEAR(std::abs(raw[3 - m] - (m % 2 ? -1.0 : 1.0) * raw[3 + m]), 0, 1e-13);
  }
}

TEST(WignerM0, Examples) {
  EXPECT_NEAR(std::abs(wigner_m0(1, 0, 0.7) - std::cos(0.7)), 0, 1e-15);
  for (int m = -4; m <= 4; ++m) EXPECT_EQ(std::abs(wigner_m0(4, m, 0.0)), m == 0 ? 1.0 : 0.0);
  const cplx w = wigner_m0(1, 1, kPi / 2);
  EXPECT_NEAR(std::abs(w), 1 / std::sqrt(2.0), 1e-15);
  const SpinRep rep(2);
  EXPECT_NEAR(std::abs(w - rotate_unnormalized(rep, {kPi / 2, 0})[0]), 0, 1e-14);
  EXPECT_THROW((void)wigner_m0(2, 3, 0.1), Error);
}

TEST(WignerColumn, MatchesMatrixExponential) {
  std::mt19937_64 rng(83);
  for (int n = 2; n <= 50; n += 8) {
    const int j = n / 2;
    const SpinRep rep(n);
    for (int k = 0; k < 5; ++k) {
      const ComplexPhase phi{testing::uniform(rng, -kPi, kPi), testing::uniform(rng, -0.6, 0.6)};
      const Eigen::VectorXcd oracle = rotate_unnormalized(rep, phi);
      const Eigen::VectorXcd col = wigner_column(j, phi.value());
      EXPECT_LT((col - oracle).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, oracle.cwiseAbs().maxCoeff()))
          << "N=" << n;
    }
  }
}

TEST(WignerColumn, NormalizationIdentity) {
  for (int j : {1, 3, 10, 25}) {
    const ComplexPhase phi{0.45, -0.27};
    const double lhs = wigner_column(j, phi.value()).squaredNorm();
    const double rhs = wigner_m0(j, 0, cplx(0, 2 * phi.phi2)).real();
    EXPECT_NEAR(lhs, rhs, 1e-10 * rhs);
  }
}

TEST(DickeJ, OddNRejected) {
  EXPECT_EQ(dicke_j_from_qubits(50), 25);
  try {
    (void)dicke_j_from_qubits(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HalfIntegerJ);
  }
  // odd N still works on the matrix path
  const auto s = rotate_dicke(SpinRep(7), {0.3, 0.1});
  EXPECT_NEAR(s.coefficients.norm(), 1.0, 1e-14);
}

TEST(JyMoments, Examples) {
  for (int j : {1, 4, 25}) {
    const auto [jy, jy2] = jy_moments(j, 0.0);
    EXPECT_NEAR(jy, 0.0, 1e-15);
    EXPECT_NEAR(jy2, j * (j + 1) / 2.0, 1e-9 * j * (j + 1));
  }
  EXPECT_NEAR(jy_moments(1, 0.25).first, std::tanh(0.5), 1e-14);
  for (double p : {0.03, 0.4}) {
    const auto [a, b] = jy_moments(5, p);
    const auto [c, d] = jy_moments(5, -p);
    EXPECT_NEAR(a, -c, 1e-13);
    EXPECT_NEAR(b, d, 1e-11);
  }
}

TEST(JyMoments, MatchDenseOracle) {
  std::mt19937_64 rng(89);
  for (int j = 1; j <= 25; j += 3) {
    const SpinRep rep(2 * j);
    for (int k = 0; k < 10; ++k) {
      const ComplexPhase phi{testing::uniform(rng, -1, 1), testing::uniform(rng, -0.4, 0.4)};
      const auto dm = dense_moments(rep, rotate_dicke(rep, phi).coefficients);
      const auto [jy, jy2] = jy_moments(j, phi.phi2);
      EXPECT_NEAR(jy, dm.jy, 1e-9 * std::max(1.0, std::abs(dm.jy)));
      EXPECT_NEAR(jy2, dm.jy2, 1e-9 * dm.jy2);
    }
  }
}

TEST(JyMoments, SmallPhi2SeriesIsContinuous) {
  for (int j : {2, 25}) {
    const SpinRep rep(2 * j);
    for (double phi2 : {5e-5, 0.99e-4, 1.01e-4}) {
      const auto dm = dense_moments(rep, rotate_dicke(rep, {0.0, phi2}).coefficients);
      EXPECT_NEAR(jy_moments(j, phi2).second, dm.jy2, 1e-10 * dm.jy2) << phi2;
    }
  }
}

TEST(VarPhi2, HeisenbergLimitAndOracle) {
  EXPECT_NEAR(var_phi2(1, 0.0), 0.25, 1e-12);
  EXPECT_NEAR(var_phi2(25, 0.0), 1.0 / 1300, 1e-12);
  const SpinRep rep(4);
  const auto dm = dense_moments(rep, rotate_dicke(rep, {0.0, 0.1}).coefficients);
  EXPECT_NEAR(1 / var_phi2(2, 0.1), 4 * dm.v(1, 1), 1e-9);
}

TEST(VarPhi2, MinimizedAtZero) {
  for (int j : {2, 10}) {
    const double best = var_phi2(j, 0.0);
    for (double p = -0.5; p <= 0.5; p += 0.05) EXPECT_GE(var_phi2(j, p), best - 1e-15);
  }
}

TEST(JzMoments, Examples) {
  const auto [z2, z4] = jz_moments(3, {0, 0});
  EXPECT_NEAR(z2, 0, 1e-15);
  EXPECT_NEAR(z4, 0, 1e-15);
  EXPECT_NEAR(jz_moments(1, {kPi / 2, 0}).first, 1.0, 1e-14);
}

TEST(JzMoments, MatchDenseOracle) {
  std::mt19937_64 rng(97);
  for (int j = 1; j <= 25; j += 4) {
    const SpinRep rep(2 * j);
    for (int k = 0; k < 10; ++k) {
      const ComplexPhase phi{testing::uniform(rng, -kPi, kPi), testing::uniform(rng, -0.5, 0.5)};
      const auto dm = dense_moments(rep, rotate_dicke(rep, phi).coefficients);
      const auto [z2, z4] = jz_moments(j, phi);
      EXPECT_NEAR(z2, dm.jz2, 1e-9 * std::max(1.0, dm.jz2));
      EXPECT_NEAR(z4, dm.jz4, 1e-9 * std::max(1.0, dm.jz4));
      EXPECT_GE(z4, z2 * z2 - 1e-9);
    }
  }
}

TEST(Jz2Derivatives, MatchFiniteDifferences) {
  struct Case {
    int j;
    ComplexPhase phi;
  };
  for (const auto& c : {Case{1, {0.4, 0.2}}, Case{25, {kPi / 4, 0.1}}, Case{5, {-1.1, -0.3}},
                        Case{10, {0.2, 0.02}}}) {
    const double h = 1e-5;
    const auto [d1, d2] = jz2_derivatives(c.j, c.phi);
    const double f1 = (jz_moments(c.j, {c.phi.phi1 + h, c.phi.phi2}).first -
                       jz_moments(c.j, {c.phi.phi1 - h, c.phi.phi2}).first) / (2 * h);
    const double f2 = (jz_moments(c.j, {c.phi.phi1, c.phi.phi2 + h}).first -
                       jz_moments(c.j, {c.phi.phi1, c.phi.phi2 - h}).first) / (2 * h);
    EXPECT_NEAR(d1, f1, 1e-6 * std::abs(f1));
    EXPECT_NEAR(d2, f2, 1e-6 * std::abs(f2));
  }
  EXPECT_EQ(jz2_derivatives(4, {0.0, 0.2}).first, 0.0);
}

TEST(VarPhi1, SliceAtZeroPhi2) {
  for (int j : {1, 2, 5, 10, 25}) {
    for (double phi1 : {0.1, 0.3, 0.6, -0.45}) {
      const double expected = slice_closed_form(j, phi1);
      EXPECT_NEAR(inv_var_phi1(j, {phi1, 0.0}), expected, 1e-9 * expected) << "j=" << j;
    }
  }
}

TEST(VarPhi1, HeisenbergLimitAtOrigin) {
  for (int n : {2, 4, 10, 20, 50}) {
    const int j = n / 2;
    const double expected = 2.0 / (double(n) * (n + 2));
    EXPECT_NEAR(var_phi1(j, {0, 0}), expected, 1e-6 * expected) << "N=" << n;
  }
}

TEST(VarPhi1, NonUniformLimitAwayFromPhi2Zero) {
  EXPECT_EQ(inv_var_phi1(25, {0.0, 0.02}), 0.0);
  try {
    (void)var_phi1(25, {0.0, 0.02});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentVariance);
  }
  EXPECT_GT(inv_var_phi1(25, {1e-3, 0.02}), 0.0);
}

TEST(DickeCovariance, AgreesWithVarPhi1) {
  for (const ComplexPhase phi : {ComplexPhase{0.2, 0.05}, ComplexPhase{-0.4, 0.1}}) {
    const auto c = dicke_covariance(4, phi);
    EXPECT_NEAR(c.cov(0, 0), var_phi1(4, phi), 1e-10 * c.cov(0, 0));
    EXPECT_NEAR(c.cov(1, 1), var_phi2(4, phi.phi2), 1e-10 * c.cov(1, 1));
  }
}

TEST(VarPhi2, IndependentOfPhi1) {
  std::mt19937_64 rng(101);
  const double ref = dicke_covariance(5, {0.3, 0.12}).cov(1, 1);
  for (int k = 0; k < 20; ++k) {
    const ComplexPhase phi{testing::uniform(rng, 0.05, 1.4), 0.12};
    EXPECT_NEAR(dicke_covariance(5, phi).cov(1, 1), ref, 1e-12 * ref);
  }
}

TEST(LegendreRecurrence, Residuals) {
  EXPECT_LT(legendre_recurrence_check(2, 0.3), 1e-10);
  EXPECT_LT(legendre_recurrence_check(10, 0.05), 1e-9);
  EXPECT_LT(legendre_recurrence_check(25, 1.0), 1e-8);
  EXPECT_THROW((void)legendre_recurrence_check(1, 0.3), Error);
}

TEST(EstimateDickePhase, InvertsExactMoments) {
  for (const ComplexPhase phi : {ComplexPhase{0.1, 0.05}, ComplexPhase{0.6, -0.2}, ComplexPhase{1.2, 0.0}}) {
    const int j = 4;
    const auto [jz2, jz4] = jz_moments(j, phi);
    (void)jz4;
    const double jy = jy_moments(j, phi.phi2).first;
    const auto est = estimate_dicke_phase(jz2, jy, j);
    EXPECT_NEAR(est.phi1, phi.phi1, 1e-9);
    EXPECT_NEAR(est.phi2, phi.phi2, 1e-12);
  }
  EXPECT_THROW((void)estimate_dicke_phase(0.1, 4.0, 4), Error);
}

TEST(DickeFisher, BoundNearHeisenbergAtN50) {
  const auto bound = cramer_rao_bound(dicke_fisher(25, {0.01, 0.0}));
  const double limit = 2.0 / (50.0 * 52.0);
  EXPECT_LE(bound.cov(0, 0), limit * 1.05);
  EXPECT_LE(bound.cov(1, 1), limit * 1.05);
}

}  // namespace
}  // namespace dtomo
