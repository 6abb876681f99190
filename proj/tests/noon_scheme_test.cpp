#include <gtest/gtest.h>

#include <cmath>

#include "dtomo/errors.hpp"
#include "dtomo/noon_scheme.hpp"
#include "test_util.hpp"

namespace dtomo {
namespace {

TEST(NoonFinalState, SingleQubitSpecialization) {
  std::mt19937_64 rng(61);
  const Qubit plus = Qubit(1, 1) / std::sqrt(2.0);
  for (int k = 0; k < 50; ++k) {
    const AlphaBeta ab{testing::random_complex(rng), testing::random_complex(rng)};
    const auto s = noon_final_state(ab, 1);
    EXPECT_LT(global_phase_distance(s.vec(), final_pointer_state(ab, plus, Axis::z)), 1e-12);
  }
}

TEST(NoonFinalState, RealPhaseIsBalanced) {
  const auto s = noon_final_state(ComplexPhase{0.8, 0}, 7);
  EXPECT_NEAR(std::abs(s.amp0), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(s.amp1), 1 / std::sqrt(2.0), 1e-15);
}

TEST(NoonFinalState, HalfHalfNEqualsTwo) {
  const auto s = noon_final_state(AlphaBeta{0.5, 0.5}, 2);
  const Eigen::Vector2cd expected(std::polar(1.0, -kPi / 2) / std::sqrt(2.0), std::polar(1.0, kPi / 2) / std::sqrt(2.0));
  EXPECT_LT((s.vec() - expected).norm(), 1e-15);
}

TEST(NoonFinalState, TwoConstructionsAgree) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 200; ++k) {
    const AlphaBeta ab{testing::random_complex(rng), testing::random_complex(rng, 0.3)};
    const int n = 1 + k % 50;
    const auto a = noon_final_state(ab, n);
    const auto b = noon_final_state(phase_from_alpha_beta(ab), n);
    EXPECT_LT(global_phase_distance(a.vec(), b.vec()), 1e-10) << "N=" << n;
  }
}

TEST(NoonFinalState, LargeNStaysFinite) {
  const auto s = noon_final_state(AlphaBeta{cplx(0.9, 0.1), cplx(0.2, 0.3)}, 2000);
  EXPECT_TRUE(std::isfinite(std::abs(s.amp0)) && std::isfinite(std::abs(s.amp1)));
  EXPECT_NEAR(s.vec().norm(), 1.0, 1e-12);
}

TEST(NoonExpectations, Examples) {
  auto [m1, m2] = noon_expectations({0, 0}, 5);
  EXPECT_EQ(m1, 1.0);
  EXPECT_EQ(m2, 0.0);
  std::tie(m1, m2) = noon_expectations({kPi / 2, 0}, 2);
  EXPECT_NEAR(m1, -1.0, 1e-15);
  EXPECT_EQ(m2, 0.0);
  std::tie(m1, m2) = noon_expectations({0.3, 0.1}, 4);
  EXPECT_NEAR(m1, std::cos(1.2) / std::cosh(0.4), 1e-15);
  EXPECT_NEAR(m2, std::tanh(0.4), 1e-15);
}

TEST(NoonExpectations, MatchDenseSubspace) {
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < 100; ++k) {
      const ComplexPhase phi{testing::uniform(rng, -kPi, kPi), testing::uniform(rng, -0.5, 0.5)};
      const auto [m1, m2] = noon_expectations(phi, n);
      const auto [d1, d2] = noon_dense_expectations(noon_final_state(phi, n));
      EXPECT_NEAR(m1, d1, 1e-12);
      EXPECT_NEAR(m2, d2, 1e-12);
    }
  }
}

TEST(NoonVariance, ClosedFormDiagonal) {
  for (int n : {1, 2, 4, 10, 20}) {
    for (double phi2 : {0.0, 0.01, 0.05, -0.08}) {
      const ComplexPhase phi{0.37 / n, phi2};
      const auto c = noon_variance(phi, n);
      const double expected = std::pow(std::cosh(n * phi2), 2) / (double(n) * n);
      EXPECT_NEAR(c.cov(0, 0), expected, 1e-12 * expected);
      EXPECT_NEAR(c.cov(1, 1), expected, 1e-12 * expected);
      EXPECT_TRUE(is_psd(c.cov));
    }
  }
  EXPECT_NEAR(noon_variance({0.2, 0}, 1).cov(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(noon_variance({0.3, 0.05}, 10).cov(0, 0), 0.0127154031740762, 1e-12);
}

TEST(NoonVariance, MatchesNoonExample) {
  const auto c = noon_variance({0.3, 0.1}, 4);
  EXPECT_NEAR(c.cov(0, 0), std::pow(std::cosh(0.4), 2) / 16, 1e-14);
}

TEST(NoonVariance, SingularWhereSinVanishes) {
  try {
    (void)noon_variance({kPi / 4, 0.1}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularJacobian);
  }
}

TEST(NoonJacobian, MatchesFiniteDifferences) {
  const ComplexPhase phi{0.21, -0.07};
  const int n = 6;
  const double h = 1e-6;
  const auto j = noon_jacobian(phi, n);
  const auto [p1a, p2a] = noon_expectations({phi.phi1 + h, phi.phi2}, n);
  const auto [p1b, p2b] = noon_expectations({phi.phi1 - h, phi.phi2}, n);
  const auto [q1a, q2a] = noon_expectations({phi.phi1, phi.phi2 + h}, n);
  const auto [q1b, q2b] = noon_expectations({phi.phi1, phi.phi2 - h}, n);
  EXPECT_NEAR(j(0, 0), (p1a - p1b) / (2 * h), 1e-7);
  EXPECT_NEAR(j(1, 0), (p2a - p2b) / (2 * h), 1e-7);
  EXPECT_NEAR(j(0, 1), (q1a - q1b) / (2 * h), 1e-7);
  EXPECT_NEAR(j(1, 1), (q2a - q2b) / (2 * h), 1e-7);
}

TEST(NoonPovm, ProjectorsAndParity) {
  const auto s = noon_final_state(ComplexPhase{0.4, 0.2}, 3);
  NoonPovm proj{{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
  const auto p = noon_povm_probabilities(proj, s);
  EXPECT_NEAR(p[0], std::norm(s.amp0), 1e-15);
  EXPECT_NEAR(p[1], std::norm(s.amp1), 1e-15);
  EXPECT_EQ(p[2], 0.0);

  const double phi1 = 0.3;
  const int n = 5;
  const auto par = noon_povm_probabilities(NoonPovm::parity(), std::exp(-kI * phi1), n);
  EXPECT_NEAR(par[0], (1 + std::cos(n * phi1)) / 2, 1e-14);
  EXPECT_NEAR(par[1], (1 - std::cos(n * phi1)) / 2, 1e-14);
}

TEST(NoonPovm, ClosedFormMatchesQuadraticForm) {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 200; ++k) {
    // random valid POVM: split a random PSD block and its complement
    const double a = testing::uniform(rng, 0, 1), b = testing::uniform(rng, 0, 1);
    const double cmax = std::sqrt(std::min(a * b, (1 - a) * (1 - b)));
    const cplx c = std::polar(testing::uniform(rng, 0, cmax), testing::uniform(rng, -kPi, kPi));
    const NoonPovm povm{{{a, b, c}, {1 - a, 1 - b, -c}}};
    const AlphaBeta ab{testing::random_complex(rng), testing::random_complex(rng, 0.4)};
    const int n = 1 + k % 30;
    const auto closed = noon_povm_probabilities(povm, ab, n);
    const auto dense = noon_povm_probabilities(povm, noon_final_state(ab, n));
    EXPECT_NEAR(closed.sum(), 1.0, 1e-12);
    EXPECT_GE(closed.minCoeff(), -1e-12);
    EXPECT_LT((closed - dense).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(NoonPovm, Validation) {
  EXPECT_NO_THROW(NoonPovm::parity().validate());
  EXPECT_NO_THROW(NoonPovm::branch().validate());
  EXPECT_THROW((NoonPovm{{{0.5, 0.5, 0.5}}}.validate()), Error);
  EXPECT_THROW((NoonPovm{{{0.5, 0.5, 0.9}, {0.5, 0.5, -0.9}}}.validate()), Error);
}

TEST(GammaRatio, Examples) {
  EXPECT_EQ(gamma_ratio({0.7, 0.0}), 1.0);
  const cplx g = gamma_ratio({0.5, 0.5});
  EXPECT_NEAR(std::abs(g + kI), 0, 1e-15);
  EXPECT_NEAR(std::abs(g), 1.0, 1e-15);
  try {
    (void)gamma_ratio({1.0, kI});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtGamma);
  }
}

TEST(GammaRatio, EqualsExpMinusIPhi) {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 300; ++k) {
    const AlphaBeta ab{testing::random_complex(rng), testing::random_complex(rng)};
    const auto phi = phase_from_alpha_beta(ab);
    EXPECT_LT(std::abs(gamma_ratio(ab) - std::exp(-kI * phi.value())), 1e-10 * std::abs(gamma_ratio(ab)));
  }
  // phi = 0.2i  ->  |gamma| = e^{0.2}
  const AlphaBeta ab{std::cos(cplx(0, 0.1)), std::sin(cplx(0, 0.1))};
  EXPECT_NEAR(std::abs(gamma_ratio(ab)), std::exp(0.2), 1e-14);
}

TEST(NoonFisher, ParityAloneIsRankOne) {
  try {
    (void)cramer_rao_bound(fisher_matrix(noon_probability_model(NoonPovm::parity(), 6), {0.2, 0.05}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularFisher);
  }
}

TEST(NoonFisher, SaturatesVarianceLawAtQuarterFringe) {
  for (int n : {2, 4, 8, 16}) {
    for (double phi2 : {0.0, 0.05, 0.1}) {
      const ComplexPhase phi{kPi / (2.0 * n), phi2};
      const auto bound = cramer_rao_bound(noon_fisher(phi, n));
      const double expected = std::pow(std::cosh(n * phi2), 2) / (double(n) * n);
      EXPECT_NEAR(bound.cov(0, 0), expected, 1e-7 * expected);
      EXPECT_NEAR(bound.cov(1, 1), expected, 1e-7 * expected);
    }
  }
}

TEST(EstimateNoonPhase, InvertsExpectations) {
  for (int n : {1, 4, 10}) {
    const ComplexPhase phi{0.7 / n, 0.03};
    const auto [m1, m2] = noon_expectations(phi, n);
    const auto est = estimate_noon_phase(m1, m2, n);
    EXPECT_NEAR(est.phi1, phi.phi1, 1e-12);
    EXPECT_NEAR(est.phi2, phi.phi2, 1e-12);
  }
  EXPECT_THROW((void)estimate_noon_phase(0.2, 1.0, 3), Error);
  EXPECT_THROW((void)estimate_noon_phase(0.99, 0.5, 1), Error);
}

}  // namespace
}  // namespace dtomo
