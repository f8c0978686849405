#pragma once

// Exact entropy of sup-norm hyperrectangles (p = q = inf): per-axis product
// formula, counting-function formula, explicit optimal coverings.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "metent/constants.hpp"
#include "metent/error.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

/// Default cap on the number of enumerated covering centers.
inline constexpr std::uint64_t kDefaultCenterCap = 10'000'000;

struct HyperrectEntropy {
  double bits = 0.0;
  std::vector<std::uint64_t> per_axis_counts;  ///< ceil(mu_n/eps) for every axis with count >= 2
  std::uint64_t effective_dim = 0;
  BigInt product = 1;  ///< exact prod ceil(mu_n/eps)
};

/// ceil(mu/eps) for plain doubles, decided without rounding error.
inline std::uint64_t exact_ceil_ratio(double mu, double eps) {
  if (!(mu > 0.0) || !(eps > 0.0)) throw InvalidInput("ceil ratio needs positive arguments");
  const double guess = std::ceil(mu / eps);
  if (!(guess < 0x1p52)) throw CapExceeded("per-axis count mu/eps exceeds 2^52", guess);
  auto m = static_cast<std::uint64_t>(std::max(1.0, guess));
  auto exceeds = [&](std::uint64_t k) { return std::fma(static_cast<double>(k), eps, -mu) < 0.0; };
  while (m > 1 && !exceeds(m - 1)) --m;
  while (exceeds(m)) ++m;
  return m;
}

/// H(eps) = log2 prod_n ceil(mu_n/eps), the product taken as a big integer.
inline HyperrectEntropy exact_entropy(const SemiAxisModel& model, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidInput("eps must be a positive finite number");
  HyperrectEntropy out;
  const std::uint64_t active = counting(model, eps, 1);
  out.per_axis_counts.reserve(active);
  for (std::uint64_t n = 1; n <= active; ++n) out.per_axis_counts.push_back(axis_ceil_ratio(model, n, eps));
  out.effective_dim = active;
  out.product = product_tree(out.per_axis_counts);
  out.bits = active == 0 ? 0.0 : log2_bigint(out.product);
  return out;
}

struct CountingEntropy {
  double bits = 0.0;
  std::vector<std::uint64_t> counts;  ///< M_1(eps), ..., M_K(eps); M_{K+1} = 0
};

/// H(eps) = sum_k log2(1 + 1/k) M_k(eps).
inline CountingEntropy exact_entropy_counting(const SemiAxisModel& model, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidInput("eps must be a positive finite number");
  CountingEntropy out;
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t m = counting(model, eps, k);
    if (m == 0) break;
    out.counts.push_back(m);
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i < out.counts.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    acc += std::log2(1.0 + 1.0 / k) * static_cast<double>(out.counts[i]);
  }
  out.bits = acc.value();
  return out;
}

/// prod_k ((k+1)/k)^{M_k} as an exact reduced rational.
inline Rational counting_product(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> num;
  std::vector<BigInt> den;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::uint64_t k = i + 1;
    num.push_back(big_pow(k + 1, counts[i]));
    den.push_back(big_pow(k, counts[i]));
  }
  return Rational(product_tree(std::span<const BigInt>(num)), product_tree(std::span<const BigInt>(den)));
}

/// The same product in telescoped form prod_{j>=2} j^{M_{j-1} - M_j}; always an integer.
inline BigInt counting_product_telescoped(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> factors;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::uint64_t next = i + 1 < counts.size() ? counts[i + 1] : 0;
    if (counts[i] < next) throw InvalidInput("counting function must be non-increasing in k");
    if (counts[i] > next) factors.push_back(big_pow(i + 2, counts[i] - next));
  }
  return product_tree(std::span<const BigInt>(factors));
}

/// Per-axis grids of an optimal sup-norm covering: m_i = ceil(mu_i/eps)
/// points at -mu_i + (2j-1) mu_i/m_i.
struct ProductCovering {
  std::vector<std::vector<double>> axis_points;
  BigInt size = 1;

  /// Half of the spacing on axis i; the covering radius along that axis.
  [[nodiscard]] double half_spacing(std::size_t i, std::span<const double> axes) const {
    return axes[i] / static_cast<double>(axis_points[i].size());
  }
};

inline ProductCovering optimal_covering_grid(std::span<const double> axes, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidInput("eps must be a positive finite number");
  ProductCovering out;
  for (double mu : axes) {
    const std::uint64_t m = exact_ceil_ratio(mu, eps);
    std::vector<double> pts;
    pts.reserve(m);
    if (m == 1) {
      pts.push_back(0.0);
    } else {
      const double step = mu / static_cast<double>(m);
      for (std::uint64_t j = 1; j <= m; ++j) pts.push_back(-mu + static_cast<double>(2 * j - 1) * step);
    }
    out.size *= m;
    out.axis_points.push_back(std::move(pts));
  }
  return out;
}

/// All centers of the product covering; CapExceeded (carrying the count) past `cap`.
inline std::vector<std::vector<double>> optimal_covering(std::span<const double> axes, double eps,
                                                         std::uint64_t cap = kDefaultCenterCap) {
  const ProductCovering grid = optimal_covering_grid(axes, eps);
  if (grid.size > cap) {
    throw CapExceeded("covering has more centers than the cap", static_cast<double>(grid.size));
  }
  std::vector<std::vector<double>> centers;
  const auto total = static_cast<std::uint64_t>(grid.size);
  centers.reserve(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::vector<double> x(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) x[i] = grid.axis_points[i][idx[i]];
    centers.push_back(std::move(x));
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++idx[i] < grid.axis_points[i].size()) break;
      idx[i] = 0;
    }
  }
  return centers;
}

/// Leading term c^{1/b} eps^{-1/b} S(b) of the canonical hyperrectangle entropy.
inline double canonical_asymptotic(double b, double c, double eps) {
  if (!(b > 0.0) || !(c > 0.0) || !(eps > 0.0)) throw InvalidInput("b, c and eps must be positive");
  return std::pow(c / eps, 1.0 / b) * zeta_series_constant(b);
}

}  // namespace metent
