#pragma once

// Certified covering-number bounds for finite-dimensional p-ellipsoids in q-norm.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "metent/constants.hpp"
#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/hyperrect.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

/// {x in R^d : sum |x_i/mu_i|^p <= 1} with non-increasing mu.
struct FiniteEllipsoid {
  HolderExponent p;
  std::vector<double> axes;

  FiniteEllipsoid(HolderExponent p_, std::vector<double> axes_) : p(p_), axes(std::move(axes_)) {
    if (axes.empty()) throw InvalidInput("finite ellipsoid needs at least one axis");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (!(axes[i] > 0.0) || !std::isfinite(axes[i])) throw InvalidInput("axes must be positive and finite");
      if (i > 0 && axes[i] > axes[i - 1]) throw InvalidInput("axes must be non-increasing");
    }
  }

  [[nodiscard]] std::uint64_t dim() const noexcept { return axes.size(); }

  /// log2 of the geometric mean of the axes.
  [[nodiscard]] double log2_geometric_mean() const {
    CompensatedSum acc;
    for (double a : axes) acc += std::log2(a);
    return acc.value() / static_cast<double>(axes.size());
  }
};

enum class BoundKind { Lower, Upper };
enum class BoundCase { FD1, FD2, VolumeLower, BoxGrid };

inline std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::FD1: return "FD1";
    case BoundCase::FD2: return "FD2";
    case BoundCase::VolumeLower: return "volume-lower";
    case BoundCase::BoxGrid: return "box-grid";
  }
  return "unknown";
}

struct FiniteBound {
  double log2_bound = 0.0;  ///< bound on log2 N
  BoundKind kind = BoundKind::Lower;
  Interval valid_radius_range;  ///< lower end is open (0, upper]
  BoundCase case_tag = BoundCase::VolumeLower;
  double kappa_used = 1.0;
  double eta = 0.0;
};

/// max(0, d log2(V_{p,q,d} geo_mean(mu) / eps)); valid for every eps > 0.
inline FiniteBound volume_lower_bound(const FiniteEllipsoid& e, const HolderExponent& q, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const auto d = static_cast<double>(e.dim());
  const double log2_v = std::log2(volume_ratio(e.p, q, e.dim()));
  const double raw = d * (log2_v + e.log2_geometric_mean() - std::log2(eps));
  FiniteBound out;
  out.log2_bound = std::max(0.0, raw);
  out.kind = BoundKind::Lower;
  out.valid_radius_range = {0.0, std::numeric_limits<double>::infinity()};
  out.case_tag = BoundCase::VolumeLower;
  return out;
}

/// (1 + 1/(d ln d)) (d ln d + d ln ln d + 1)^{1/d}, defined for d >= 3.
inline double kappa_explicit(std::uint64_t d) {
  if (d < 3) throw InvalidInput("explicit density constant needs d >= 3");
  const auto dd = static_cast<double>(d);
  const double l = std::log(dd);
  return (1.0 + 1.0 / (dd * l)) * std::exp(std::log(dd * l + dd * std::log(l) + 1.0) / dd);
}

/// (0, eta d^{-(1/p-1/q)_+} mu_d] for FD1, (0, eta d^{1/q-1/p} mu_d] for FD2 (p >= q).
inline Interval admissible_radius(const FiniteEllipsoid& e, const HolderExponent& q, double eta, BoundCase c) {
  if (!(eta > 0.0)) throw InvalidInput("eta must be positive");
  const auto d = static_cast<double>(e.dim());
  const double diff = e.p.reciprocal() - q.reciprocal();  // 1/p - 1/q
  const double mu_d = e.axes.back();
  switch (c) {
    case BoundCase::FD1: return {0.0, eta * std::pow(d, -std::max(0.0, diff)) * mu_d};
    case BoundCase::FD2:
      if (e.p < q) throw InvalidInput("case FD2 requires p >= q");
      return {0.0, eta * std::pow(d, -diff) * mu_d};
    default: throw InvalidInput("admissible radius is defined for FD1 and FD2 only");
  }
}

/// log2 N <= log2(2^{d log2(kappa (1+eta) B / eps)} + 1) with B = V geo_mean (FD1)
/// or d^{1/q-1/p} geo_mean (FD2). Throws when eps lies outside the admissible range.
inline FiniteBound density_upper_bound(const FiniteEllipsoid& e, const HolderExponent& q, double eps, double eta,
                                       BoundCase c = BoundCase::FD1) {
  if (e.dim() < 3) throw InvalidInput("density upper bound needs d >= 3");
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const Interval range = admissible_radius(e, q, eta, c);
  if (eps > range.upper) {
    throw InvalidInput("radius outside admissible range (0, " + std::to_string(range.upper) + "]");
  }
  const auto d = static_cast<double>(e.dim());
  const double kappa = kappa_explicit(e.dim());
  const double log2_b = c == BoundCase::FD1
                            ? std::log2(volume_ratio(e.p, q, e.dim())) + e.log2_geometric_mean()
                            : (q.reciprocal() - e.p.reciprocal()) * std::log2(d) + e.log2_geometric_mean();
  const double above = d * (std::log2(kappa) + std::log2(1.0 + eta) + log2_b - std::log2(eps));
  FiniteBound out;
  // log2(2^above + 1) without overflow
  out.log2_bound = above > 0 ? above + std::log2(1.0 + std::exp2(-above)) : std::log2(std::exp2(above) + 1.0);
  out.kind = BoundKind::Upper;
  out.valid_radius_range = range;
  out.case_tag = c;
  out.kappa_used = kappa;
  out.eta = eta;
  return out;
}

/// Smallest eta that admits eps in the given case.
inline double minimal_eta(const FiniteEllipsoid& e, const HolderExponent& q, double eps, BoundCase c) {
  return eps / admissible_radius(e, q, 1.0, c).upper;
}

/// Axis-aligned grid covering of the bounding box: spacing 2h with d^{1/q} h <= eps,
/// log2 prod_i ceil(mu_i / h). Valid for every eps and every d.
inline FiniteBound box_grid_upper_bound(const FiniteEllipsoid& e, const HolderExponent& q, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const double h = eps * std::pow(static_cast<double>(e.dim()), -q.reciprocal());
  std::vector<std::uint64_t> counts;
  counts.reserve(e.dim());
  for (double mu : e.axes) counts.push_back(exact_ceil_ratio(mu, h));
  FiniteBound out;
  out.log2_bound = log2_bigint(product_tree(counts));
  out.kind = BoundKind::Upper;
  out.valid_radius_range = {0.0, std::numeric_limits<double>::infinity()};
  out.case_tag = BoundCase::BoxGrid;
  return out;
}

/// Same bound for the first d semi-axes of a model, with the model's exact ceilings.
inline FiniteBound box_grid_upper_bound(const SemiAxisModel& model, std::uint64_t d, const HolderExponent& q,
                                        double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const double h = eps * std::pow(static_cast<double>(d), -q.reciprocal());
  std::vector<std::uint64_t> counts;
  counts.reserve(d);
  for (std::uint64_t n = 1; n <= d; ++n) counts.push_back(axis_ceil_ratio(model, n, h));
  FiniteBound out;
  out.log2_bound = log2_bigint(product_tree(counts));
  out.kind = BoundKind::Upper;
  out.valid_radius_range = {0.0, std::numeric_limits<double>::infinity()};
  out.case_tag = BoundCase::BoxGrid;
  return out;
}

/// FD1 and FD2 (when p >= q) at their smallest admissible eta, or nullopt when
/// d < 3 or neither eta is at most max_eta.
inline std::optional<FiniteBound> best_density_bound(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                                                     double max_eta = std::numeric_limits<double>::infinity()) {
  std::optional<FiniteBound> best;
  if (e.dim() < 3) return best;
  for (BoundCase c : {BoundCase::FD1, BoundCase::FD2}) {
    if (c == BoundCase::FD2 && e.p < q) continue;
    const double eta = minimal_eta(e, q, eps, c);
    if (!(eta <= max_eta) || !std::isfinite(eta)) continue;
    // guard against eps landing a rounding error past the range edge
    const FiniteBound b = density_upper_bound(e, q, eps, eta * (1.0 + 1e-12), c);
    if (!best || b.log2_bound < best->log2_bound) best = b;
  }
  return best;
}

/// The tightest certified upper bound available at eps: the box grid or the
/// density bound at its smallest admissible eta.
inline FiniteBound best_upper_bound(const FiniteEllipsoid& e, const HolderExponent& q, double eps,
                                    double max_eta = std::numeric_limits<double>::infinity()) {
  FiniteBound best = box_grid_upper_bound(e, q, eps);
  if (const auto fd = best_density_bound(e, q, eps, max_eta); fd && fd->log2_bound < best.log2_bound) best = *fd;
  return best;
}

}  // namespace metent
