#include <gtest/gtest.h>

#include <cmath>

#include "dtomo/errors.hpp"
#include "dtomo/statekit.hpp"
#include "test_util.hpp"

namespace dtomo {
namespace {

const double kRt2 = std::sqrt(2.0);

TEST(MakeState, SymmetricTwoLevel) {
  const std::vector<cplx> raw{1.0, 1.0};
  const auto s = make_state(raw);
  EXPECT_NEAR(std::abs(s.amplitude(1) - 1 / kRt2), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(2) - 1 / kRt2), 0, 1e-15);
  EXPECT_NEAR(tilde_psi(s), kRt2, 1e-15);
}

TEST(MakeState, RemovesGlobalPhase) {
  const std::vector<cplx> raw{kI, kI};
  const auto s = make_state(raw);
  EXPECT_NEAR(std::abs(s.amplitude(1) - 1 / kRt2), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(2) - 1 / kRt2), 0, 1e-15);
}

TEST(MakeState, OneAndI) {
  const std::vector<cplx> raw{1.0, kI};
  const auto s = make_state(raw);
  const cplx e = std::polar(1.0, -kPi / 4) / kRt2;
  EXPECT_NEAR(std::abs(s.amplitude(1) - e), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(2) - e * kI), 0, 1e-15);
  const auto amps = s.amplitudes();
  const cplx sum = amps[0] + amps[1];
  EXPECT_NEAR(sum.imag(), 0, 1e-15);
  EXPECT_NEAR(sum.real(), 1.0, 1e-15);
}

TEST(MakeState, Rejections) {
  const std::vector<cplx> zero{0.0, 0.0}, cancel{1.0, -1.0}, single{1.0};
  try {
    (void)make_state(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroNorm);
  }
  try {
    (void)make_state(cancel);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroSum);
  }
  try {
    (void)make_state(single);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(MakeState, IdempotentAndConventionHolds) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 9;
    const auto s = testing::random_state(rng, d);
    const std::vector<cplx> again(s.amplitudes().begin(), s.amplitudes().end());
    const auto t = make_state(again);
    double norm = 0;
    cplx sum = 0;
    for (int x = 1; x <= d; ++x) {
      EXPECT_LT(std::abs(s.amplitude(x) - t.amplitude(x)), 1e-14);
      norm += std::norm(s.amplitude(x));
      sum += s.amplitude(x);
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_GT(tilde_psi(s), 0.0);
    EXPECT_LT(std::abs(sum.imag()), 1e-12);
  }
}

TEST(TildePsi, MatchesReversedSummation) {
  EXPECT_NEAR(tilde_psi(preset_state("uniform-7")), std::sqrt(7.0), 1e-14);
  std::mt19937_64 rng(11);
  const auto s = testing::random_state(rng, 12);
  cplx sum = 0;
  for (int x = s.dim(); x >= 1; --x) sum += s.amplitude(x);
  EXPECT_NEAR(tilde_psi(s), sum.real(), 1e-14);
}

TEST(TimeReverse, ConjugatesAndIsInvolution) {
  const std::vector<cplx> raw{1.0, kI};
  const auto s = make_state(raw);
  const auto t = time_reverse(s);
  const cplx e = std::polar(1.0, kPi / 4) / kRt2;
  EXPECT_NEAR(std::abs(t.amplitude(1) - e), 0, 1e-15);
  EXPECT_NEAR(std::abs(t.amplitude(2) + e * kI), 0, 1e-15);

  std::mt19937_64 rng(3);
  const auto r = testing::random_state(rng, 5);
  const auto rr = time_reverse(time_reverse(r));
  for (int x = 1; x <= 5; ++x) EXPECT_EQ(rr.amplitude(x), r.amplitude(x));

  const auto u = preset_state("uniform-2");
  const auto ut = time_reverse(u);
  for (int x = 1; x <= 2; ++x) EXPECT_EQ(ut.amplitude(x), u.amplitude(x));
}

TEST(Presets, RampAndErrors) {
  const auto r = preset_state("ramp-3");
  const double n = std::sqrt(14.0);
  for (int x = 1; x <= 3; ++x) EXPECT_NEAR(std::abs(r.amplitude(x) - x / n), 0, 1e-15);
  EXPECT_THROW((void)preset_state("ramp-1"), Error);
  EXPECT_THROW((void)preset_state("spiral-4"), Error);
  EXPECT_THROW((void)preset_state("uniform-x"), Error);
}

TEST(IllConditioned, FlagsTinySum) {
  const std::vector<cplx> raw{1.0, -1.0 + 1e-8};
  const auto s = make_state(raw);
  EXPECT_TRUE(s.ill_conditioned());
  EXPECT_FALSE(preset_state("uniform-2").ill_conditioned());
}

}  // namespace
}  // namespace dtomo
