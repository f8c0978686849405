#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "metent/finite_bounds.hpp"
#include "metent/hyperrect.hpp"

using namespace metent;

namespace {

const HolderExponent kInf = HolderExponent::infinity();

HolderExponent pick(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return HolderExponent(1);
    case 1: return HolderExponent(2);
    default: return kInf;
  }
}

}  // namespace

TEST(FiniteEllipsoidTest, Validation) {
  EXPECT_THROW(FiniteEllipsoid(HolderExponent(2), {}), InvalidInput);
  EXPECT_THROW(FiniteEllipsoid(HolderExponent(2), {1, 2}), InvalidInput);
  EXPECT_THROW(FiniteEllipsoid(HolderExponent(2), {1, -1}), InvalidInput);
}

TEST(VolumeLower, Examples) {
  const FiniteEllipsoid line(HolderExponent(1.5), {2.0});
  EXPECT_NEAR(volume_lower_bound(line, HolderExponent(3), 0.3).log2_bound, std::log2(2.0 / 0.3), 1e-13);
  const FiniteEllipsoid rect(kInf, {1.0, 0.5});
  const auto lb = volume_lower_bound(rect, kInf, 0.3);
  EXPECT_NEAR(lb.log2_bound, std::log2(0.5 / 0.09), 1e-13);
  EXPECT_LE(lb.log2_bound, exact_entropy(SemiAxisModel::table(rect.axes), 0.3).bits);
  EXPECT_EQ(volume_lower_bound(rect, kInf, 0.8).log2_bound, 0.0);
  EXPECT_EQ(lb.kind, BoundKind::Lower);
}

TEST(VolumeLower, OneDimensionalBelowExactCount) {
  for (double eps : {0.07, 0.2, 0.5}) {
    const FiniteEllipsoid e(HolderExponent(2), {1.1});
    EXPECT_LE(volume_lower_bound(e, HolderExponent(1), eps).log2_bound, std::log2(std::ceil(1.1 / eps)));
  }
}

TEST(Kappa, ExplicitConstant) {
  EXPECT_THROW(kappa_explicit(2), InvalidInput);
  EXPECT_LE(kappa_explicit(10000), 1.01);
  double prev = kappa_explicit(3);
  for (std::uint64_t d = 10; d <= 1'000'000; d *= 10) {
    const double k = kappa_explicit(d);
    EXPECT_LT(k, prev);
    EXPECT_GT(k, 1.0);
    prev = k;
  }
}

TEST(AdmissibleRadius, Examples) {
  const FiniteEllipsoid e(HolderExponent(2), {1, 0.5, 0.25});
  EXPECT_DOUBLE_EQ(admissible_radius(e, HolderExponent(2), 1.5, BoundCase::FD1).upper, 0.375);
  EXPECT_DOUBLE_EQ(admissible_radius(e, HolderExponent(2), 1.5, BoundCase::FD2).upper, 0.375);
  const FiniteEllipsoid box(kInf, {1, 1, 1, 0.1});
  EXPECT_NEAR(admissible_radius(box, HolderExponent(2), 1.0, BoundCase::FD2).upper, 0.2, 1e-15);
  const FiniteEllipsoid cross(HolderExponent(1), {1, 1, 1, 0.1});
  EXPECT_NEAR(admissible_radius(cross, HolderExponent(2), 2.0, BoundCase::FD1).upper, 0.1, 1e-15);
  EXPECT_THROW(admissible_radius(cross, HolderExponent(2), 1.0, BoundCase::FD2), InvalidInput);
}

TEST(DensityUpper, RejectsOutOfRangeAndSmallDimension) {
  const FiniteEllipsoid e(HolderExponent(2), {1, 1, 1});
  EXPECT_THROW(density_upper_bound(e, HolderExponent(2), 2.0, 1.0), InvalidInput);
  EXPECT_THROW(density_upper_bound(FiniteEllipsoid(HolderExponent(2), {1, 1}), HolderExponent(2), 0.1, 1.0),
               InvalidInput);
  const auto b = density_upper_bound(e, HolderExponent(2), 0.5, 1.0);
  EXPECT_EQ(b.case_tag, BoundCase::FD1);
  EXPECT_EQ(b.kind, BoundKind::Upper);
  EXPECT_DOUBLE_EQ(b.kappa_used, kappa_explicit(3));
  EXPECT_DOUBLE_EQ(b.valid_radius_range.upper, 1.0);
}

TEST(DensityUpper, BallExample) {
  const FiniteEllipsoid ball(HolderExponent(2), std::vector<double>(16, 1.0));
  const auto b = density_upper_bound(ball, HolderExponent(2), 0.5, 1.0);
  EXPECT_TRUE(std::isfinite(b.log2_bound));
  EXPECT_NEAR(b.log2_bound, 16 * std::log2(kappa_explicit(16) * 2 / 0.5), 1e-6);
  EXPECT_GE(b.log2_bound, volume_lower_bound(ball, HolderExponent(2), 0.5).log2_bound);
}

TEST(DensityUpper, SandwichOnRandomGrid) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  int checked = 0;
  while (checked < 50) {
    const std::size_t d = 3 + rng() % 14;
    std::vector<double> axes(d);
    for (double& a : axes) a = u(rng);
    std::sort(axes.rbegin(), axes.rend());
    const FiniteEllipsoid e(pick(rng), axes);
    const HolderExponent q = pick(rng);
    const double eta = 0.5 + 2 * u(rng);
    for (BoundCase c : {BoundCase::FD1, BoundCase::FD2}) {
      if (c == BoundCase::FD2 && e.p < q) continue;
      const double eps = admissible_radius(e, q, eta, c).upper * u(rng);
      const auto up = density_upper_bound(e, q, eps, eta, c);
      EXPECT_GE(up.log2_bound, volume_lower_bound(e, q, eps).log2_bound);
      ++checked;
    }
  }
}

TEST(BoxGrid, ValidEverywhereAndAboveVolume) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> axes(1 + rng() % 6);
    for (double& a : axes) a = u(rng);
    std::sort(axes.rbegin(), axes.rend());
    const FiniteEllipsoid e(pick(rng), axes);
    const HolderExponent q = pick(rng);
    const double eps = u(rng) * 0.5;
    EXPECT_GE(box_grid_upper_bound(e, q, eps).log2_bound, volume_lower_bound(e, q, eps).log2_bound);
  }
}

TEST(BoxGrid, EqualsExactEntropyForSupNorm) {
  const std::vector<double> axes = {1, 0.5, 1.0 / 3.0};
  const FiniteEllipsoid e(kInf, axes);
  EXPECT_DOUBLE_EQ(box_grid_upper_bound(e, kInf, 0.3).log2_bound, 4.0);
  const auto m = SemiAxisModel::canonical(1, 1);
  EXPECT_DOUBLE_EQ(box_grid_upper_bound(m, 99, kInf, 0.01).log2_bound, exact_entropy(m, 0.01).bits);
}

TEST(BestUpper, NeverAboveItsParts) {
  const FiniteEllipsoid e(HolderExponent(2), std::vector<double>(8, 1.0));
  const auto best = best_upper_bound(e, HolderExponent(2), 0.4);
  EXPECT_LE(best.log2_bound, box_grid_upper_bound(e, HolderExponent(2), 0.4).log2_bound);
  EXPECT_LE(best.log2_bound, density_upper_bound(e, HolderExponent(2), 0.4, 1.0).log2_bound);
  EXPECT_FALSE(best_density_bound(FiniteEllipsoid(HolderExponent(2), {1, 1}), HolderExponent(2), 0.4).has_value());
}

TEST(Bounds, ScaleEquivariance) {
  const std::vector<double> axes = {1.0, 0.7, 0.4, 0.2};
  for (double lambda : {0.5, 4.0, 1024.0}) {
    std::vector<double> scaled = axes;
    for (double& a : scaled) a *= lambda;
    for (auto [p, q] : {std::pair{HolderExponent(1), HolderExponent(2)}, std::pair{kInf, HolderExponent(2)},
                        std::pair{HolderExponent(2), HolderExponent(2)}}) {
      const FiniteEllipsoid e(p, axes);
      const FiniteEllipsoid s(p, scaled);
      const double eps = 0.05;
      EXPECT_NEAR(volume_lower_bound(e, q, eps).log2_bound, volume_lower_bound(s, q, eps * lambda).log2_bound, 1e-10);
      EXPECT_NEAR(density_upper_bound(e, q, eps, 1.0).log2_bound,
                  density_upper_bound(s, q, eps * lambda, 1.0).log2_bound, 1e-10);
    }
  }
}
