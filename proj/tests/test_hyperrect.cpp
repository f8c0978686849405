#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "metent/constants.hpp"
#include "metent/hyperrect.hpp"
#include "reference_values.hpp"

using namespace metent;

TEST(ExactEntropy, Examples) {
  const auto h = exact_entropy(SemiAxisModel::table({1, 0.5, 1.0 / 3.0}), 0.3);
  EXPECT_EQ(h.per_axis_counts, (std::vector<std::uint64_t>{4, 2, 2}));
  EXPECT_DOUBLE_EQ(h.bits, 4.0);
  EXPECT_EQ(h.product, 16);
  EXPECT_DOUBLE_EQ(exact_entropy(SemiAxisModel::canonical(1, 1), 0.3).bits, 4.0);
  const auto trivial = exact_entropy(SemiAxisModel::canonical(1, 1), 1.0);
  EXPECT_EQ(trivial.bits, 0.0);
  EXPECT_TRUE(trivial.per_axis_counts.empty());
}

TEST(ExactEntropy, CountingRouteExamples) {
  const auto c = exact_entropy_counting(SemiAxisModel::canonical(1, 1), 0.3);
  EXPECT_EQ(c.counts, (std::vector<std::uint64_t>{3, 1, 1}));
  EXPECT_NEAR(c.bits, 4.0, 1e-14);
  EXPECT_EQ(exact_entropy_counting(SemiAxisModel::canonical(1, 1), 2.0).bits, 0.0);
  const auto t = exact_entropy_counting(SemiAxisModel::table({2, 2}), 0.5);
  EXPECT_EQ(t.counts, (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_NEAR(t.bits, 4.0, 1e-14);
}

TEST(ExactEntropy, DualFormulaIntegerIdentity) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> val(0.01, 5.0);
  std::uniform_real_distribution<double> eps_dist(0.02, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> axes(1 + rng() % 30);
    for (double& a : axes) a = val(rng);
    if (trial % 4 == 0) {
      // integer ratios exercise the ceiling ties
      for (double& a : axes) a = std::round(a * 4) / 4 + 0.25;
    }
    std::sort(axes.rbegin(), axes.rend());
    const double eps = trial % 4 == 0 ? 0.25 : eps_dist(rng);
    const auto m = SemiAxisModel::table(axes);
    const auto direct = exact_entropy(m, eps);
    const auto counted = exact_entropy_counting(m, eps);
    EXPECT_EQ(counting_product(counted.counts), Rational(direct.product)) << trial;
    EXPECT_EQ(counting_product_telescoped(counted.counts), direct.product) << trial;
    EXPECT_NEAR(direct.bits, counted.bits, 1e-10 * std::max(1.0, direct.bits));
  }
}

TEST(ExactEntropy, RationalEpsilonReference) {
  // reference computed with eps exactly 1/100 and 1/1000; no axis ratio is within
  // the double rounding of an integer so the counts coincide
  EXPECT_NEAR(exact_entropy(SemiAxisModel::canonical(1, 1), 1e-2).bits, ref::canonical_entropy_rational_eps_1e_2, 1e-9);
  EXPECT_NEAR(exact_entropy(SemiAxisModel::canonical(1, 1), 1e-3).bits, ref::canonical_entropy_rational_eps_1e_3, 1e-9);
  EXPECT_EQ(exact_entropy(SemiAxisModel::canonical(1, 1), 1e-2).effective_dim, 99u);
}

TEST(ExactEntropy, PerAxisCountsNonIncreasing) {
  const auto h = exact_entropy(SemiAxisModel::two_term(1, 0.5, 0.7, 1.3), 1e-3);
  EXPECT_TRUE(std::is_sorted(h.per_axis_counts.rbegin(), h.per_axis_counts.rend()));
  for (auto c : h.per_axis_counts) EXPECT_GE(c, 2u);
}

TEST(ExactEntropy, MonotoneInEpsAndAxes) {
  const auto small = SemiAxisModel::canonical(1.2, 1.0);
  const auto big = SemiAxisModel::canonical(1.2, 1.3);
  double prev = 1e300;
  for (double eps = 1e-4; eps < 2; eps *= 1.5) {
    const double bits = exact_entropy(small, eps).bits;
    EXPECT_LE(bits, exact_entropy(big, eps).bits);
    EXPECT_LE(bits, prev);
    prev = bits;
  }
}

TEST(Covering, Examples) {
  const std::vector<double> one = {1.0};
  const auto c = optimal_covering(one, 0.3);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_DOUBLE_EQ(c[0][0], -0.75);
  EXPECT_DOUBLE_EQ(c[1][0], -0.25);
  EXPECT_DOUBLE_EQ(c[2][0], 0.25);
  EXPECT_DOUBLE_EQ(c[3][0], 0.75);
  const std::vector<double> small = {0.2};
  EXPECT_EQ(optimal_covering(small, 0.3), (std::vector<std::vector<double>>{{0.0}}));
  const std::vector<double> two = {1.0, 0.5};
  EXPECT_EQ(optimal_covering(two, 0.3).size(), 8u);
}

TEST(Covering, CapReportsSize) {
  const std::vector<double> axes(30, 1.0);
  try {
    optimal_covering(axes, 0.3, 1000);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_DOUBLE_EQ(e.reported_size(), std::pow(4.0, 30));
  }
}

TEST(Covering, SampledPointsAreCovered) {
  std::mt19937_64 rng(5);
  const std::vector<double> axes = {1.3, 0.9, 0.45};
  const double eps = 0.17;
  const auto grid = optimal_covering_grid(axes, eps);
  for (std::size_t i = 0; i < axes.size(); ++i) EXPECT_LE(grid.half_spacing(i, axes), eps);
  const auto centers = optimal_covering(axes, eps);
  EXPECT_EQ(BigInt(centers.size()), exact_entropy(SemiAxisModel::table(axes), eps).product);
  for (int s = 0; s < 10000; ++s) {
    std::vector<double> x(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) x[i] = std::uniform_real_distribution<double>(-axes[i], axes[i])(rng);
    double best = 1e300;
    for (const auto& c : centers) {
      double d = 0;
      for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - c[i]));
      best = std::min(best, d);
    }
    ASSERT_LE(best, eps * (1 + 1e-12));
  }
}

TEST(Covering, OneDimensionalCountIsMinimal) {
  // m - 1 intervals of length 2 eps cannot cover [-mu, mu] when (m-1) 2 eps < 2 mu
  for (double mu : {0.7, 1.0, 2.9}) {
    for (double eps : {0.05, 0.13, 0.3}) {
      const std::uint64_t m = exact_ceil_ratio(mu, eps);
      EXPECT_LT(static_cast<double>(m - 1) * eps, mu);
      EXPECT_GE(static_cast<double>(m) * eps, mu);
    }
  }
}

TEST(CanonicalAsymptotic, Examples) {
  EXPECT_NEAR(canonical_asymptotic(1, 1, 1e-3), 1e3 * ref::zeta_series_1, 1e-8);
  for (double b : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(canonical_asymptotic(b, 2, 1e-3) / canonical_asymptotic(b, 1, 1e-3), std::pow(2.0, 1 / b), 1e-12);
  }
}

TEST(CanonicalAsymptotic, ResidualIsLogarithmic) {
  double worst = 0;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const double r = std::abs(exact_entropy(SemiAxisModel::canonical(1, 1), eps).bits - canonical_asymptotic(1, 1, eps));
    worst = std::max(worst, r / std::log2(1 / eps));
  }
  EXPECT_LT(worst, 2.0);
}
