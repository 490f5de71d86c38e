#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chebroot/errors.hpp"
#include "chebroot/quartic.hpp"
#include "support/oracles.hpp"

namespace chebroot {
namespace {

constexpr double kPi = std::numbers::pi;

double bridge_residual(const QuarticReduction& r) {
  double worst = 0.0;
  const double scale = 8.0 / std::pow(r.u, 4);
  for (int i = 0; i < 1000; ++i) {
    const double th = kPi * i / 999.0;
    const double rhs = scale * eval_poly(r.source.as_poly(), r.u * std::cos(th));
    worst = std::max(worst, std::abs(eval_f4(r.params, th) - rhs));
  }
  return worst;
}

// The parameters a, b are derived, not quoted; every other quartic test
// depends on this identity holding.
TEST(QuarticBridge, IdentityGate) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const QuarticReduction r = reduce_quartic(-std::abs(d(rng)) - 0.05, d(rng), d(rng));
    EXPECT_LE(bridge_residual(r), 1e-10 * (1 + std::abs(r.params.a) + std::abs(r.params.b)));
  }
}

TEST(ReduceQuartic, Examples) {
  QuarticReduction r = reduce_quartic(-2, 0, 0);
  EXPECT_NEAR(r.u, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(r.params.a, 0.0);
  EXPECT_NEAR(r.params.b, -1.0, 1e-15);
  for (double th : {0.0, kPi / 2, kPi}) EXPECT_NEAR(eval_f4(r.params, th), 0.0, 1e-15);

  r = reduce_quartic(-2, 0, 0.75);
  EXPECT_EQ(r.params.a, 0.0);
  EXPECT_NEAR(r.params.b, 0.5, 1e-15);
  EXPECT_LE(bridge_residual(r), 1e-10);

  EXPECT_THROW(reduce_quartic(1, 0, 0), MethodNotApplicable);
}

TEST(QuarticCritical, StationaryByFiniteDifferences) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> d(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    const QuarticParams p{d(rng), d(rng)};
    const CriticalSet cs = solve_critical_quartic(p);
    EXPECT_LE(cs.size(), 3u);
    for (double th : cs.thetas) {
      const double fd = testing::central_difference([&](double t) { return eval_f4(p, t); }, th);
      EXPECT_LE(std::abs(fd), 1e-8) << "a=" << p.a;
      EXPECT_LE(std::abs(eval_f4_prime(p, th)), 1e-10);
    }
  }
}

TEST(ClassifyQuartic, BiquadraticCases) {
  ClassificationReport r = classify_quartic(-2, 0, 0.5);
  EXPECT_EQ(r.n_real, 4);
  ASSERT_EQ(r.roots.size(), 4u);
  EXPECT_NEAR(r.roots[3], std::sqrt(1 + std::sqrt(0.5)), 1e-9);
  EXPECT_NEAR(r.roots[2], std::sqrt(1 - std::sqrt(0.5)), 1e-9);

  r = classify_quartic(-2, 0, 5);
  EXPECT_EQ(r.n_real, 0);
  EXPECT_TRUE(r.roots.empty());

  r = classify_quartic(-2, 0, -3);
  EXPECT_EQ(r.n_real, 2);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_NEAR(r.roots[1], std::sqrt(3.0), 1e-9);
  EXPECT_EQ(r.n_ext_plus, 1);
  EXPECT_EQ(r.n_ext_minus, 1);
}

TEST(ClassifyQuartic, DoubleRootAtOriginIsFlagged) {
  const ClassificationReport r = classify_quartic(-2, 0, 0);
  EXPECT_TRUE(r.has_flag(Degeneracy::MultipleRoot));
  EXPECT_TRUE(r.has_flag(Degeneracy::TangentZero));
  EXPECT_EQ(r.method, Method::OracleFallback);
  EXPECT_EQ(r.n_real, 3);
  EXPECT_EQ(r.oracle_n_real, 3);
}

TEST(ClassifyQuartic, TwoRootsOnOneHalfLine) {
  // Convex outside [-u, u] yet P(u) > 0 with two roots in (1, 2).
  const ClassificationReport r = classify_quartic(-1, -10, 10.5);
  EXPECT_TRUE(r.has_flag(Degeneracy::NonGenericExterior));
  EXPECT_EQ(r.n_ext_plus, 2);
  EXPECT_EQ(r.n_real, 2);
}

TEST(ClassifyQuartic, NonNegativeMFallsBack) {
  const ClassificationReport r = classify_quartic(1, 0, -1);
  EXPECT_EQ(r.method, Method::OracleFallback);
  EXPECT_TRUE(r.has_flag(Degeneracy::MethodNotApplicable));
  EXPECT_EQ(r.n_real, 2);
}

TEST(DepressQuartic, RemovesCubicTerm) {
  const double c[] = {1, -4, 6, -4, 1};  // (z - 1)^4
  const DepressedQuartic dq = depress_quartic(c);
  EXPECT_EQ(dq.shift, -1.0);
  EXPECT_EQ(dq.m, 0.0);
  EXPECT_EQ(dq.p, 0.0);
  EXPECT_EQ(dq.q, 0.0);
  const double bad[] = {0, 1, 2, 3, 4};
  EXPECT_THROW(depress_quartic(bad), InvalidInput);
}

TEST(ClassifyQuartic, ParityAndCompanionAgreement) {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> d(-10, 10);
  int compared = 0;
  while (compared < 2000) {
    const double c[] = {1, d(rng), d(rng), d(rng), d(rng)};
    const DepressedQuartic dq = depress_quartic(c);
    if (!(dq.m < 0)) continue;
    const ClassificationReport r = classify_quartic(dq);
    if (!r.has_flag(Degeneracy::MultipleRoot)) { EXPECT_EQ(r.n_real % 2, 0); }
    const auto eig = testing::companion_roots(dq.as_poly().coeffs());
    bool ambiguous = false;
    int real = 0;
    for (const auto& z : eig) {
      if (z.imag() != 0.0 && std::abs(z.imag()) < 1e-5 * (1 + std::abs(z))) ambiguous = true;
      real += z.imag() == 0.0;
    }
    if (ambiguous || r.method != Method::TrigMethod) continue;
    EXPECT_EQ(*r.trig_n_real, real);
    ++compared;
  }
}

}  // namespace
}  // namespace chebroot
