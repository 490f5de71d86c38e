#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chebroot/critical.hpp"
#include "chebroot/sturm.hpp"
#include "support/oracles.hpp"

namespace chebroot {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_well_formed(const CriticalSet& cs) {
  ASSERT_EQ(cs.thetas.size(), cs.xs.size());
  EXPECT_LE(cs.size(), 4u);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_GT(cs.thetas[i], 0.0);
    EXPECT_LT(cs.thetas[i], kPi);
    if (i) { EXPECT_GT(cs.thetas[i], cs.thetas[i - 1]); }
  }
}

TEST(CriticalG, HandArithmetic) {
  EXPECT_EQ(critical_g({0, 0, 0}, 0.0), 5.0);
  EXPECT_EQ(critical_g({0, 0, 0}, 0.5), -5.0);
  EXPECT_EQ(critical_g({0, -4, 0}, 0.0), 1.0);
}

TEST(CriticalG, FactorsDerivativeOfF) {
  // f'(theta) = -sin(theta) g(cos theta)
  const TrigParams p{1.3, -0.4, 0.0};
  for (double th = 0.01; th < kPi; th += 0.07) {
    EXPECT_NEAR(eval_f_prime(p, th), -std::sin(th) * critical_g(p, std::cos(th)), 1e-12);
  }
}

TEST(SolveCritical, PureCosineHasFourCriticalPoints) {
  const CriticalSet cs = solve_critical(TrigParams{0, 0, 0});
  expect_well_formed(cs);
  EXPECT_TRUE(cs.used_biquadratic);
  ASSERT_EQ(cs.size(), 4u);
  // x^2 = (3 +- sqrt 5) / 8, i.e. theta = k pi / 5.
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(cs.thetas[static_cast<std::size_t>(k - 1)], k * kPi / 5, 1e-12);
    EXPECT_LE(std::abs(critical_g({0, 0, 0}, cs.xs[static_cast<std::size_t>(k - 1)])), 1e-10);
  }
  EXPECT_NEAR(cs.xs[0] * cs.xs[0], (3 + std::sqrt(5.0)) / 8, 1e-14);
  EXPECT_NEAR(cs.xs[1] * cs.xs[1], (3 - std::sqrt(5.0)) / 8, 1e-14);
}

TEST(SolveCritical, BetaFiveStillHasFourCriticalPoints) {
  // 80y^2 - 60y + 10 = 0 -> y in {1/2, 1/4}.
  const CriticalSet cs = solve_critical(TrigParams{0, 5, 0});
  expect_well_formed(cs);
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_NEAR(cs.xs[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(cs.xs[1], 0.5, 1e-15);
  EXPECT_NEAR(cs.xs[2], -0.5, 1e-15);
  EXPECT_NEAR(cs.xs[3], -std::sqrt(0.5), 1e-15);
}

TEST(SolveCritical, NegativeDiscriminantGivesEmptySet) {
  // 5 - 0.8 * 7 < 0
  const CriticalSet cs = solve_critical(TrigParams{0, 7, 0});
  EXPECT_TRUE(cs.empty());
  EXPECT_TRUE(solve_critical_general(TrigParams{0, 7, 0}).empty());
}

TEST(SolveCritical, GeneralQuarticAgainstDenseScan) {
  const TrigParams p{2, -3, 2.5};
  const CriticalSet cs = solve_critical(p);
  expect_well_formed(cs);
  EXPECT_FALSE(cs.used_biquadratic);
  const int scan = testing::dense_sign_changes([&](double x) { return critical_g(p, x); },
                                               -1.0 + 1e-12, 1.0 - 1e-12, 1'000'000);
  EXPECT_EQ(static_cast<int>(cs.size()), scan);
  EXPECT_EQ(static_cast<int>(cs.size()),
            count_roots(build_chain(critical_polynomial(p)), -1.0, 1.0));
  for (double x : cs.xs) EXPECT_LE(std::abs(critical_g(p, x)), 1e-10);
}

TEST(SolveCritical, ExcludesAndFlagsRootOnBoundary) {
  // g(1) = 25 + 2 alpha + beta = 0
  const TrigParams p{1.0, -27.0, 0.0};
  const CriticalSet cs = solve_critical(p);
  EXPECT_TRUE(cs.boundary_degenerate);
  for (double x : cs.xs) EXPECT_LT(std::abs(x), 1.0);
  expect_well_formed(cs);
}

TEST(SolveCritical, ClustersRepeatedRoots) {
  // (x - 1/2)^2 (x + 1/4), exactly representable
  const CriticalSet cs = critical_set_from_polynomial(Poly{0.0625, 0.0, -0.75, 1.0});
  ASSERT_EQ(cs.size(), 2u);
  // A double root is only determined to about sqrt(machine epsilon).
  EXPECT_NEAR(cs.xs[0], 0.5, 1e-7);
  EXPECT_NEAR(cs.xs[1], -0.25, 1e-12);
}

TEST(CriticalProperty, SinFiveFactorisation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> th(1e-9, kPi - 1e-9);
  for (int i = 0; i < 1000; ++i) {
    const double t = th(rng);
    EXPECT_LE(std::abs(std::sin(5 * t) - std::sin(t) * chebyshev_U4(std::cos(t))), 1e-12);
  }
}

TEST(CriticalProperty, ReturnedThetasAreStationary) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> d(-30, 30);
  for (int trial = 0; trial < 5000; ++trial) {
    const TrigParams p{trial % 5 == 0 ? 0.0 : d(rng), d(rng), d(rng)};
    const CriticalSet cs = solve_critical(p);
    expect_well_formed(cs);
    for (double th : cs.thetas) EXPECT_LE(std::abs(eval_f_prime(p, th)), 1e-8);
  }
}

TEST(CriticalProperty, BiquadraticAgreesWithGeneralPath) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const TrigParams p{0.0, d(rng), 0.0};
    const CriticalSet closed = solve_critical_biquadratic(p);
    const CriticalSet general = solve_critical_general(p);
    ASSERT_EQ(closed.size(), general.size()) << "beta=" << p.beta;
    for (std::size_t i = 0; i < closed.size(); ++i)
      EXPECT_NEAR(closed.xs[i], general.xs[i], 1e-10) << "beta=" << p.beta;
  }
}

}  // namespace
}  // namespace chebroot
