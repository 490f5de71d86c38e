#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chebroot/errors.hpp"
#include "chebroot/sturm.hpp"
#include "support/oracles.hpp"

namespace chebroot {
namespace {

const Poly kGolden{0, 5, 0, -5, 0, 1};        // t^5 - 5t^3 + 5t
const Poly kThreeReal{-5, 1, 0, -5, 0, 1};    // t^5 - 5t^3 + t - 5
const Poly kOneReal{5, 2, 1, -5, 0, 1};       // t^5 - 5t^3 + t^2 + 2t + 5

TEST(BuildChain, TextbookQuadratic) {
  const SturmChain chain = build_chain(Poly{-1, 0, 1});
  ASSERT_EQ(chain.polys().size(), 3u);
  EXPECT_EQ(chain.polys()[0], (Poly{-1, 0, 1}));
  EXPECT_EQ(chain.polys()[1], (Poly{0, 1}));  // 2t, normalised
  EXPECT_EQ(chain.polys()[2].degree(), 0);
  EXPECT_GT(chain.polys()[2].leading(), 0.0);
  EXPECT_EQ(count_all_roots(chain), 2);
}

TEST(BuildChain, GoldenQuinticHasFullChain) {
  const SturmChain chain = build_chain(kGolden);
  EXPECT_EQ(chain.polys().size(), 6u);
  for (std::size_t i = 1; i < chain.polys().size(); ++i)
    EXPECT_LT(chain.polys()[i].degree(), chain.polys()[i - 1].degree());
  EXPECT_EQ(count_all_roots(chain), 5);
  EXPECT_EQ(count_all_roots(chain),
            static_cast<int>(testing::companion_real_roots(kGolden.coeffs()).size()));
}

TEST(BuildChain, OneRealRootExample) {
  EXPECT_EQ(count_all_roots(build_chain(kOneReal)), 1);
}

TEST(BuildChain, ZeroPolynomialThrows) {
  EXPECT_THROW(build_chain(Poly{}), ZeroPolynomial);
  EXPECT_THROW(cauchy_bound(Poly{}), ZeroPolynomial);
}

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots(build_chain(kGolden), -2.0000001, 2.0000001), 5);
  EXPECT_EQ(count_roots(build_chain(kThreeReal), 2.0, cauchy_bound(kThreeReal)), 1);
  // Strictly between the adjacent roots 0 and 1.1755...
  EXPECT_EQ(count_roots(build_chain(kGolden), 0.1, 1.1), 0);
}

TEST(CountRoots, HalfOpenIntervalIncludesRightEndpointOnly) {
  const SturmChain chain = build_chain(Poly{-1, 0, 1});
  EXPECT_EQ(count_roots(chain, -1.0, 1.0), 1);  // (-1, 1] holds 1 only
  EXPECT_EQ(count_roots(chain, -2.0, -1.0), 1);
  EXPECT_EQ(count_roots(chain, -1.0, 0.5), 0);
  // Double root sitting on an endpoint: t^2 (t^2 - 2)
  const SturmChain dbl = build_chain(Poly{0, 0, -2, 0, 1});
  EXPECT_EQ(count_roots(dbl, -3.0, 0.0), 2);
  EXPECT_EQ(count_roots(dbl, 0.0, 3.0), 1);
}

TEST(CauchyBound, Examples) {
  EXPECT_EQ(cauchy_bound(kGolden), 6.0);
  EXPECT_EQ(cauchy_bound(Poly{0, 0, 0, 0, 0, 1}), 1.0);
  EXPECT_EQ(cauchy_bound(kThreeReal), 6.0);
}

TEST(IsolateAndRefine, Examples) {
  const auto three = isolate_and_refine(kThreeReal, -6, 6);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_NEAR(three[0], -2.043, 5e-4);
  EXPECT_NEAR(three[1], -1.205, 5e-4);
  EXPECT_NEAR(three[2], 2.286, 5e-4);

  const auto pm = isolate_and_refine(Poly{-1, 0, 1}, -2, 2);
  ASSERT_EQ(pm.size(), 2u);
  EXPECT_NEAR(pm[0], -1.0, 1e-13);
  EXPECT_NEAR(pm[1], 1.0, 1e-13);

  const auto one = isolate_and_refine(kOneReal, -6, 6);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0], -2.335, 5e-4);
}

TEST(IsolateAndRefine, MatchesCompanionMatrix) {
  const auto roots = isolate_and_refine(kThreeReal, -6, 6);
  const auto ref = testing::companion_real_roots(kThreeReal.coeffs());
  ASSERT_EQ(roots.size(), ref.size());
  for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], ref[i], 1e-9);
}

TEST(Multiplicity, PureFifthPower) {
  const OracleResult r = oracle_solve(Poly{0, 0, 0, 0, 0, 1});
  EXPECT_EQ(r.distinct_real, 1);
  EXPECT_TRUE(r.multiple_roots);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].value, 0.0);
  EXPECT_EQ(r.roots[0].multiplicity, 5);
}

TEST(Multiplicity, MixedMultiplicities) {
  // (t - 1)^3 (t + 2)^2
  const auto c = testing::from_roots({1.0, 1.0, 1.0, -2.0, -2.0});
  const OracleResult r = oracle_solve(Poly(c));
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_NEAR(r.roots[0].value, -2.0, 1e-6);
  EXPECT_EQ(r.roots[0].multiplicity, 2);
  EXPECT_NEAR(r.roots[1].value, 1.0, 1e-4);
  EXPECT_EQ(r.roots[1].multiplicity, 3);
}

TEST(OracleProperty, CountMatchesIsolation) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> d(-10, 10);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& v : c) v = d(rng);
    const Poly p(c);
    const SturmChain chain = build_chain(p);
    const double b = cauchy_bound(p);
    EXPECT_EQ(count_roots(chain, -b, b), static_cast<int>(isolate_and_refine(chain, -b, b).size()));
    EXPECT_EQ(count_roots(chain, -b, b), count_all_roots(chain));
  }
}

TEST(OracleProperty, AgreesWithCompanionEigenvalues) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> d(-10, 10);
  int compared = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> c{d(rng), d(rng), d(rng), d(rng), d(rng), 1.0};
    const auto eig = testing::companion_roots(c);
    // Skip near-real complex pairs, where the eigen solver's own tolerance decides.
    bool ambiguous = false;
    for (const auto& z : eig)
      if (z.imag() != 0.0 && std::abs(z.imag()) < 1e-5 * (1 + std::abs(z))) ambiguous = true;
    if (ambiguous) continue;
    int real = 0;
    for (const auto& z : eig) real += z.imag() == 0.0 ? 1 : 0;
    EXPECT_EQ(count_all_roots(build_chain(Poly(c))), real);
    ++compared;
  }
  EXPECT_GT(compared, 1900);
}

TEST(OracleProperty, ConjugateParity) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const Poly p{d(rng), d(rng), d(rng), d(rng), d(rng), 1.0 + std::abs(d(rng))};
    const SturmChain chain = build_chain(p);
    if (chain.has_multiple_roots()) continue;
    EXPECT_EQ(count_all_roots(chain) % 2, 1);
  }
}

TEST(OracleProperty, GcdDetectsConstructedDoubleRoot) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const double r = d(rng);
    const Poly square = Poly{-r, 1} * Poly{-r, 1};
    const Poly cubic{d(rng), d(rng), d(rng), 1.0};
    EXPECT_TRUE(build_chain(square * cubic).has_multiple_roots()) << "r=" << r;
    // The same cubic times a split pair is square-free unless the draw is unlucky.
    const Poly split = Poly{-r - 0.5, 1} * Poly{-r + 0.5, 1};
    const Poly sf = split * cubic;
    const auto eig = testing::companion_roots(sf.coeffs());
    double min_gap = 1e300;
    for (std::size_t i = 0; i < eig.size(); ++i)
      for (std::size_t j = i + 1; j < eig.size(); ++j) min_gap = std::min(min_gap, std::abs(eig[i] - eig[j]));
    if (min_gap > 1e-3) { EXPECT_FALSE(build_chain(sf).has_multiple_roots()) << "r=" << r; }
  }
}

}  // namespace
}  // namespace chebroot
