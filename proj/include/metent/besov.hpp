#pragma once

// Besov balls B^s_{p1,p1} on a domain of volume vol, seen through their
// wavelet coefficients as a canonical ellipsoid measured in the 2-norm.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "metent/asymptotics.hpp"
#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/sequences.hpp"

namespace metent {

struct BesovSpec {
  double s = 1.0;
  std::uint64_t d = 1;
  HolderExponent p1 = HolderExponent(2.0);
  double vol = 1.0;
};

/// Decay exponent s/d - (1/p1 - 1/2) of the coefficient semi-axes.
inline double besov_axis_exponent(const BesovSpec& spec) {
  if (!(spec.s > 0.0) || !std::isfinite(spec.s)) throw InvalidInput("s must be positive");
  if (spec.d == 0) throw InvalidInput("d must be at least 1");
  if (!(spec.vol > 0.0) || !std::isfinite(spec.vol)) throw InvalidInput("vol must be positive");
  return spec.s / static_cast<double>(spec.d) - (spec.p1.reciprocal() - 0.5);
}

/// mu_n = (vol/n)^beta, beta = s/d - (1/p1 - 1/2).
inline SemiAxisModel semi_axes_from_besov(const BesovSpec& spec) {
  const double beta = besov_axis_exponent(spec);
  if (!(beta > 0.0)) throw NonCompactRegime("s/d must exceed 1/p1 - 1/2 for a compact embedding");
  return SemiAxisModel::canonical(beta, std::pow(spec.vol, beta));
}

struct BesovBand {
  Band band;
  double b = 0.0;       ///< decay exponent of the induced semi-axes
  double c = 0.0;       ///< vol^b
  double b_star = 0.0;  ///< s/d
  double volume_exponent = 0.0;  ///< 1 - (d/s)(1/p1 - 1/2)
  double validity_radius = 0.0;  ///< mu_1; heuristic, the asymptotic threshold is not quantified
  bool up_to_frame_constants = true;
  std::vector<std::string> warnings;
};

/// Leading-term entropy band of the induced ellipsoid (exponent p1, ambient 2-norm).
/// Both edges scale like vol^{1 - (d/s)(1/p1 - 1/2)} eps^{-d/s}.
inline BesovBand besov_entropy_band(const BesovSpec& spec, double eps) {
  const SemiAxisModel m = semi_axes_from_besov(spec);
  const Canonical& c = *m.as_canonical();
  BesovBand out;
  out.b = c.b;
  out.c = c.c;
  out.b_star = spec.s / static_cast<double>(spec.d);
  out.volume_exponent = 1.0 - (spec.p1.reciprocal() - 0.5) / out.b_star;
  out.validity_radius = c.c;
  if (spec.p1 < HolderExponent(2.0)) {
    out.warnings.emplace_back("p1 < 2: outside the range where the two-sided band is established; upper edge is order-only");
  }
  out.band = canonical_band(spec.p1, HolderExponent(2.0), c.b, c.c, eps);
  return out;
}

}  // namespace metent
