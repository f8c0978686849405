#pragma once

// Brute-force covering and packing counts on a grid, for ellipsoids of
// dimension at most 3. Slow, simple, and independent of the bounds it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metent/error.hpp"
#include "metent/finite_bounds.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/hyperrect.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

inline constexpr std::uint64_t kOracleGridCap = 10'000'000;

struct OracleReport {
  std::uint64_t cover_count = 0;  ///< upper bound on N(eps + delta)
  std::uint64_t pack_count = 0;   ///< lower bound on N(eps)
  std::uint64_t grid_resolution = 0;
  double delta = 0.0;  ///< every ellipsoid point is within delta (q-norm) of a grid point in E
  std::uint64_t grid_points = 0;  ///< grid points inside E
};

namespace detail {

/// Grid nodes x_i = (j_i - R/2) h_i, h_i = 2 mu_i / R, j_i = 0..R, with R even
/// so that 0 is a node and rounding toward zero stays on the grid.
class EllipsoidGrid {
 public:
  EllipsoidGrid(const FiniteEllipsoid& e, std::uint64_t resolution) : axes_(e.axes) {
    if (e.dim() > 3) throw InvalidInput("oracle supports dimension <= 3");
    if (resolution < 8) throw InvalidInput("oracle resolution must be >= 8");
    r_ = resolution + (resolution % 2);
    const std::size_t d = axes_.size();
    side_ = r_ + 1;
    double total = 1.0;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<double>(side_);
    if (total > static_cast<double>(kOracleGridCap)) throw CapExceeded("oracle grid exceeds the point cap", total);
    size_ = static_cast<std::size_t>(total);
    for (double mu : axes_) h_.push_back(2.0 * mu / static_cast<double>(r_));
    inside_loose_.assign(size_, 0);
    inside_strict_.assign(size_, 0);
    const HolderExponent& p = e.p;
    const std::int64_t half = static_cast<std::int64_t>(r_ / 2);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      const auto j = unflatten(idx);
      bool loose = false;
      bool strict = false;
      if (p.is_infinite()) {
        loose = strict = true;  // every node of the box lies in the box
      } else if (p.value() == 1.0 || p.value() == 2.0) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < d; ++i) {
          const std::int64_t m = std::abs(static_cast<std::int64_t>(j[i]) - half);
          acc += p.value() == 1.0 ? m : m * m;
        }
        loose = strict = acc <= (p.value() == 1.0 ? half : half * half);
      } else {
        double acc = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          const double t = static_cast<double>(std::abs(static_cast<std::int64_t>(j[i]) - half)) /
                           static_cast<double>(half);
          acc += std::pow(t, p.value());
        }
        loose = acc <= 1.0 + 1e-9;
        strict = acc <= 1.0 - 1e-9;
      }
      inside_loose_[idx] = loose;
      inside_strict_[idx] = strict;
    }
  }

  [[nodiscard]] std::size_t dim() const noexcept { return axes_.size(); }
  [[nodiscard]] std::uint64_t resolution() const noexcept { return r_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] double spacing(std::size_t i) const { return h_[i]; }
  [[nodiscard]] bool inside_loose(std::size_t idx) const { return inside_loose_[idx] != 0; }
  [[nodiscard]] bool inside_strict(std::size_t idx) const { return inside_strict_[idx] != 0; }

  [[nodiscard]] std::array<std::uint64_t, 3> unflatten(std::size_t idx) const {
    std::array<std::uint64_t, 3> j{0, 0, 0};
    for (std::size_t i = dim(); i-- > 0;) {
      j[i] = idx % side_;
      idx /= side_;
    }
    return j;
  }

  [[nodiscard]] std::size_t flatten(const std::array<std::uint64_t, 3>& j) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx = idx * side_ + j[i];
    return idx;
  }

  /// q-distance between two nodes.
  [[nodiscard]] double distance(const std::array<std::uint64_t, 3>& a, const std::array<std::uint64_t, 3>& b,
                                const HolderExponent& q) const {
    std::array<double, 3> diff{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto delta = static_cast<double>(static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]));
      diff[i] = delta * h_[i];
    }
    return q_norm(std::span<const double>(diff.data(), dim()), q);
  }

  /// Calls f(idx) for every node within q-distance `radius` of `center`.
  template <class F>
  void for_each_within(std::size_t center, double radius, const HolderExponent& q, F&& f) const {
    const auto c = unflatten(center);
    std::array<std::uint64_t, 3> lo{0, 0, 0};
    std::array<std::uint64_t, 3> hi{0, 0, 0};
    for (std::size_t i = 0; i < dim(); ++i) {
      const double reach = std::floor(radius / h_[i]);
      const auto w = reach >= static_cast<double>(r_) ? r_ : static_cast<std::uint64_t>(reach);
      lo[i] = c[i] >= w ? c[i] - w : 0;
      hi[i] = std::min<std::uint64_t>(r_, c[i] + w);
    }
    std::array<std::uint64_t, 3> j = lo;
    while (true) {
      if (distance(c, j, q) <= radius) f(flatten(j));
      std::size_t i = dim();
      while (i-- > 0) {
        if (j[i] < hi[i]) {
          ++j[i];
          break;
        }
        j[i] = lo[i];
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }

 private:
  std::vector<double> axes_;
  std::vector<double> h_;
  std::uint64_t r_ = 0;
  std::uint64_t side_ = 0;
  std::size_t size_ = 0;
  std::vector<unsigned char> inside_loose_;
  std::vector<unsigned char> inside_strict_;
};

/// Full cell diagonal: rounding a point toward zero moves each coordinate by less than h_i.
inline double grid_delta(const EllipsoidGrid& g, const HolderExponent& q) {
  std::array<double, 3> h{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < g.dim(); ++i) h[i] = g.spacing(i);
  return q_norm(std::span<const double>(h.data(), g.dim()), q);
}

}  // namespace detail

/// Greedy covering of the in-ellipsoid grid nodes by eps-balls, scanning
/// lexicographically. Every node before the first uncovered one is covered, so
/// its ball is centred up to eps further along the first axis (the 1-D optimum).
/// The count bounds N(eps + delta) from above.
inline OracleReport greedy_cover(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                                 std::uint64_t resolution) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const detail::EllipsoidGrid g(e, resolution);
  std::vector<unsigned char> covered(g.size(), 0);
  const double reach = eps * (1.0 - 1e-12);
  OracleReport out;
  out.grid_resolution = g.resolution();
  out.delta = detail::grid_delta(g, q);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (!g.inside_loose(idx)) continue;
    ++out.grid_points;
    if (covered[idx] != 0) continue;
    ++out.cover_count;
    const auto x = g.unflatten(idx);
    auto c = x;
    c[0] = std::min<std::uint64_t>(g.resolution(), x[0] + static_cast<std::uint64_t>(std::floor(reach / g.spacing(0))));
    while (c[0] > x[0] && g.distance(c, x, q) > reach) --c[0];
    g.for_each_within(g.flatten(c), reach, q, [&](std::size_t other) { covered[other] = 1; });
  }
  return out;
}

namespace detail {

inline std::uint64_t lexicographic_pack(const EllipsoidGrid& g, const HolderExponent& q, double eps) {
  std::vector<unsigned char> blocked(g.size(), 0);
  const double reach = 2.0 * eps * (1.0 + 1e-12);
  std::uint64_t count = 0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (!g.inside_strict(idx) || blocked[idx] != 0) continue;
    ++count;
    g.for_each_within(idx, reach, q, [&](std::size_t other) { blocked[other] = 1; });
  }
  return count;
}

}  // namespace detail

/// Set of nodes inside E, pairwise more than 2 eps apart: the larger of the
/// lexicographic greedy set on this grid and the packing found at half the
/// resolution (whose nodes are a subset of these), so doubling the resolution
/// never lowers the count.
inline OracleReport greedy_pack(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                                std::uint64_t resolution) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const detail::EllipsoidGrid g(e, resolution);
  OracleReport out;
  out.grid_resolution = g.resolution();
  out.delta = detail::grid_delta(g, q);
  for (std::size_t idx = 0; idx < g.size(); ++idx) out.grid_points += g.inside_strict(idx) ? 1 : 0;
  out.pack_count = detail::lexicographic_pack(g, q, eps);
  const std::uint64_t coarse = g.resolution() / 2;
  if (coarse >= 8 && coarse % 2 == 0) {
    out.pack_count = std::max(out.pack_count, greedy_pack(e, q, eps, coarse).pack_count);
  }
  return out;
}

/// Both counts on the same grid.
inline OracleReport run_oracle(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                               std::uint64_t resolution) {
  OracleReport out = greedy_cover(e, q, eps, resolution);
  out.pack_count = greedy_pack(e, q, eps, resolution).pack_count;
  return out;
}

struct SandwichCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct SandwichReport {
  OracleReport oracle;
  double volume_lower = 0.0;
  double upper = 0.0;
  std::string upper_case;
  std::optional<double> exact;  ///< p = q = inf only
  std::vector<SandwichCheck> checks;

  [[nodiscard]] bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SandwichCheck& c) { return c.pass; });
  }
};

/// Evaluates every bound and oracle count at eps and checks their ordering.
/// The upper bound is the explicit density bound (FD1 at the given eta) for
/// d >= 3 and the box-grid bound otherwise.
inline SandwichReport sandwich_report(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                                      std::uint64_t resolution = 64, double eta = 1.0) {
  SandwichReport rep;
  rep.oracle = run_oracle(e, q, eps, resolution);
  const double delta = rep.oracle.delta;
  const double log2_cover = std::log2(static_cast<double>(rep.oracle.cover_count));
  const double log2_pack = std::log2(static_cast<double>(rep.oracle.pack_count));
  const std::uint64_t pack_wide = greedy_pack(e, q, eps + delta, resolution).pack_count;

  rep.volume_lower = volume_lower_bound(e, q, eps).log2_bound;
  FiniteBound upper = box_grid_upper_bound(e, q, eps);
  if (e.dim() >= 3) upper = density_upper_bound(e, q, eps, eta, BoundCase::FD1);
  rep.upper = upper.log2_bound;
  rep.upper_case = to_string(upper.case_tag);

  // slack absorbs the last-bit difference between two sums of logarithms
  auto check = [&](std::string name, double lhs, double rhs) {
    rep.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs))});
  };
  check("volume_lower(eps+delta) <= log2 cover", volume_lower_bound(e, q, eps + delta).log2_bound, log2_cover);
  check("log2 pack <= upper", log2_pack, rep.upper);
  check("volume_lower <= upper", rep.volume_lower, rep.upper);
  check("pack(eps+delta) <= cover", static_cast<double>(pack_wide), static_cast<double>(rep.oracle.cover_count));
  if (e.p.is_infinite() && q.is_infinite()) {
    const SemiAxisModel m = SemiAxisModel::table(e.axes);
    const double h = exact_entropy(m, eps).bits;
    const double h_wide = exact_entropy(m, eps + delta).bits;
    rep.exact = h;
    check("volume_lower <= exact", rep.volume_lower, h);
    check("log2 pack <= exact", log2_pack, h);
    check("exact <= upper", h, rep.upper);
    check("exact(eps+delta) <= log2 cover", h_wide, log2_cover);
  }
  return rep;
}

}  // namespace metent
