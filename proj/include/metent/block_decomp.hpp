#pragma once

// Upper bounds for infinite-dimensional ellipsoids by splitting off a finite
// head and bounding the remaining tail, and bounds for mixed ellipsoids
// (ellipsoids of Euclidean balls).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "metent/asymptotics.hpp"
#include "metent/constants.hpp"
#include "metent/entropy_result.hpp"
#include "metent/error.hpp"
#include "metent/finite_bounds.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

enum class TailCase { I, II, III };

inline std::string to_string(TailCase c) {
  switch (c) {
    case TailCase::I: return "I";
    case TailCase::II: return "II";
    case TailCase::III: return "III";
  }
  return "unknown";
}

struct BlockPlan {
  std::vector<std::uint64_t> block_sizes;
  std::vector<double> inner_radii;
  std::vector<std::vector<double>> omega;  ///< each row has block_sizes.size() + 1 weights
  TailCase tail_case = TailCase::I;
  double tail_radius = 0.0;
};

/// Everything needed to re-check a block-decomposition bound.
struct BoundCertificate {
  std::uint64_t effective_dim = 0;
  std::vector<std::uint64_t> block_sizes;
  std::vector<double> inner_radii;
  double tail_radius = 0.0;
  std::string tail_case;
  std::string finite_case;  ///< bound used on the head
  double eta = 0.0;
  double kappa = 1.0;
  double omega_log2_size = 0.0;
  std::uint64_t omega_rows = 1;
  bool parametric = false;  ///< depends on the unquantified covering constant K
  double rogers_k = 0.0;
  double gamma = 0.0;
  double radius_reported = 0.0;  ///< the radius the bound refers to
};

struct BoundWithCertificate {
  EntropyResult result;
  BoundCertificate certificate;
};

/// Which tail case applies to (p, q, b), or throws when none does.
inline TailCase tail_case_for(const HolderExponent& p, const HolderExponent& q, double b) {
  if (p <= q) return TailCase::I;
  const int side = critical_side(p, q, Rational(b));
  if (side > 0) return TailCase::II;
  if (side == 0) return TailCase::III;
  throw NonCompactRegime("q below p/(pb+1): the ellipsoid is not compact");
}

/// Radius in q-norm of the part of the ellipsoid carried by the axes n > d.
///   I   (p <= q)               mu_{d+1}
///   II  (p/(pb+1) < q < p)     (sum_{n>d} mu_n^theta)^{1/q-1/p},  theta = 1/(1/q-1/p)
///   III (q = p/(pb+1))         (sum_{n>d} mu_n^{1/b})^b
/// Sums use the upper end of the certified bracket.
inline double tail_radius(const SemiAxisModel& model, std::uint64_t d, const HolderExponent& p,
                          const HolderExponent& q, double b, TailCase c) {
  const auto length = model.length();
  const bool empty_tail = length && d >= *length;
  switch (c) {
    case TailCase::I:
      if (!(p <= q)) throw InvalidInput("tail case I requires p <= q");
      return empty_tail ? 0.0 : model.evaluate(d + 1);
    case TailCase::II: {
      if (!(q < p) || critical_side(p, q, Rational(b)) <= 0) {
        throw InvalidInput("tail case II requires p/(pb+1) < q < p");
      }
      if (empty_tail) return 0.0;
      const double r = q.reciprocal() - p.reciprocal();
      return std::pow(tail_power_sum(model, d, 1.0 / r).upper, r);
    }
    case TailCase::III:
      if (critical_side(p, q, Rational(b)) != 0) throw InvalidInput("tail case III requires q = p/(pb+1)");
      if (empty_tail) return 0.0;
      return std::pow(tail_power_sum(model, d, 1.0 / b).upper, b);
  }
  throw InvalidInput("unknown tail case");
}

/// max over omega rows of the q-combination of (w_j rho_j) and w_{k+1} tail.
inline double combined_radius(const BlockPlan& plan, const HolderExponent& q) {
  const std::size_t k = plan.inner_radii.size();
  double best = 0.0;
  for (const auto& w : plan.omega) {
    if (w.size() != k + 1) throw InvalidInput("omega rows need one weight per block plus one for the tail");
    std::vector<double> parts(k + 1);
    for (std::size_t j = 0; j < k; ++j) parts[j] = w[j] * plan.inner_radii[j];
    parts[k] = w[k] * plan.tail_radius;
    best = std::max(best, q_norm(parts, q));
  }
  return best;
}

struct InfiniteBoundOptions {
  /// Share of eps^q given to the tail: tail^q <= split eps^q. Ignored for q = inf.
  double split = 0.5;
  std::uint64_t scan_cap = std::uint64_t{1} << 32;
  /// Largest head dimension for which the head bound is evaluated.
  std::uint64_t max_head_dim = 50'000'000;
};

/// Single-block bound: the smallest head dimension d whose tail radius fits the
/// split, a certified finite bound on the head at the remaining radius
/// rho = (eps^q - tail^q)^{1/q}, and Omega = {(1,1)}.
inline BoundWithCertificate infinite_upper_bound(const SemiAxisModel& model, const HolderExponent& p,
                                                 const HolderExponent& q, double eps,
                                                 const InfiniteBoundOptions& opt = {}) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidInput("eps must be a positive finite number");
  if (!(opt.split > 0.0 && opt.split < 1.0)) throw InvalidInput("split must lie in (0, 1)");
  const auto index = model.decay_index();
  TailCase tc = TailCase::I;
  double b = 1.0;
  if (index) {
    b = *index;
    const bool canonical_tail = model.as_table() == nullptr || model.as_table()->tail.has_value();
    const Regime r = canonical_tail ? classify_canonical(p, q, b) : classify(p, q, b, true, false);
    if (!r.compact()) throw NonCompactRegime("ellipsoid is not compact: regime " + to_string(r.regime));
    tc = tail_case_for(p, q, b);
  } else if (!(p <= q)) {
    tc = TailCase::II;
  }
  auto radius = [&](std::uint64_t d) {
    if (const auto length = model.length()) {
      if (d >= *length) return 0.0;
      if (tc == TailCase::II) {
        // Hoelder bound; finite for every exponent since the table is finite
        const double r = q.reciprocal() - p.reciprocal();
        return std::pow(tail_power_sum(model, d, 1.0 / r).upper, r);
      }
    }
    return tail_radius(model, d, p, q, b, tc);
  };

  BoundWithCertificate out;
  out.result.kind = ResultKind::CertifiedUpper;
  out.result.epsilon = eps;
  out.certificate.tail_case = to_string(tc);
  out.certificate.radius_reported = eps;

  const double alpha0 = radius(0);
  if (alpha0 <= eps) {
    out.certificate.tail_radius = alpha0;
    out.certificate.finite_case = "trivial";
    return out;
  }

  const double target = q.is_infinite() ? eps : eps * std::pow(opt.split, q.reciprocal());
  auto fits = [&](std::uint64_t d) { return radius(d) <= target; };
  std::uint64_t lo = 0;  // !fits(lo)
  std::uint64_t hi = 1;
  while (!fits(hi)) {
    lo = hi;
    if (hi > opt.scan_cap / 2) throw CapExceeded("no feasible head dimension within the scan cap", hi);
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? hi : lo) = mid;
  }
  const std::uint64_t d = hi;
  if (d > opt.max_head_dim) throw CapExceeded("head dimension exceeds cap", static_cast<double>(d));
  const double alpha = radius(d);
  const double rho = q.is_infinite() ? eps : std::pow(std::pow(eps, q.value()) - std::pow(alpha, q.value()), q.reciprocal());

  // Head axes nudged up by two ulps so the double ellipsoid contains the true one.
  std::vector<double> head(d);
  for (std::uint64_t n = 1; n <= d; ++n) {
    const double inf = std::numeric_limits<double>::infinity();
    head[n - 1] = std::nextafter(std::nextafter(model.evaluate(n), inf), inf);
  }
  for (std::uint64_t n = 1; n < d; ++n) head[n] = std::min(head[n], head[n - 1]);
  const FiniteEllipsoid e(p, std::move(head));
  FiniteBound fb = box_grid_upper_bound(model, d, q, rho);
  if (const auto fd = best_density_bound(e, q, rho); fd && fd->log2_bound < fb.log2_bound) fb = *fd;

  out.result.bits = fb.log2_bound;  // + log2 #Omega = 0
  auto& cert = out.certificate;
  cert.effective_dim = d;
  cert.block_sizes = {d};
  cert.inner_radii = {rho};
  cert.tail_radius = alpha;
  cert.finite_case = to_string(fb.case_tag);
  cert.eta = fb.eta;
  cert.kappa = fb.kappa_used;
  return out;
}

/// Ellipsoid of Euclidean balls: block j has dims[j] coordinates and radius mu_j.
struct MixedEllipsoidSpec {
  SemiAxisModel semi_axes;
  std::vector<std::uint64_t> dims;
};

namespace detail {

/// k with mu_{k+1} <= eps < mu_k.
inline std::uint64_t active_blocks(const MixedEllipsoidSpec& spec, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  if (!(eps < spec.semi_axes.evaluate(1))) throw InvalidInput("eps must be below the first semi-axis");
  const std::uint64_t k = counting(spec.semi_axes, eps, 1);
  if (k > spec.dims.size()) throw InvalidInput("not enough block dimensions for this radius");
  return k;
}

}  // namespace detail

/// log2 of binomial(n, r).
inline double log2_binomial(const BigInt& n, std::uint64_t r) {
  if (n < 1'000'000'000'000LL) {
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return log2_bigint(acc);
  }
  const auto nd = static_cast<double>(n);
  const auto rd = static_cast<double>(r);
  return (log_gamma(nd + 1.0) - log_gamma(rd + 1.0) - log_gamma(nd - rd + 1.0)) / std::numbers::ln2;
}

/// Number of non-negative integer vectors of length `len` with sum <= M:
/// binomial(M + len, len).
inline double log2_lattice_size(std::uint64_t M, std::uint64_t len) {
  return log2_binomial(BigInt(M) + len, len);
}

/// Brute-force count of the same lattice (small cases only).
inline std::uint64_t enumerate_lattice(std::uint64_t M, std::uint64_t len) {
  if (len == 0) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; m <= M; ++m) total += enumerate_lattice(M - m, len - 1);
  return total;
}

/// Lower bound sum_{j<=k} d_j log2(mu_j / eps), clipped at 0.
inline EntropyResult mixed_lower_bound(const MixedEllipsoidSpec& spec, double eps) {
  const std::uint64_t k = detail::active_blocks(spec, eps);
  CompensatedSum acc;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc += static_cast<double>(spec.dims[j - 1]) * std::log2(spec.semi_axes.evaluate(j) / eps);
  }
  return {std::max(0.0, acc.value()), ResultKind::CertifiedLower, eps};
}

/// log2 N(eps_gamma) <= log2 #Omega + sum_j d_j log2(K^{1/d_j} d_j^{5/(2 d_j)} mu_j / eps)
/// with eps_gamma = eps (1 + dbar^{-gamma} sqrt(k+1)). Parametric in K.
inline BoundWithCertificate mixed_upper_bound(const MixedEllipsoidSpec& spec, double eps, double gamma,
                                              double rogers_k = 1024.0) {
  if (!(gamma >= 1.0)) throw InvalidInput("gamma must be >= 1");
  if (!(rogers_k > 0.0)) throw InvalidInput("rogers_k must be positive");
  const std::uint64_t k = detail::active_blocks(spec, eps);
  std::uint64_t dbar = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    if (spec.dims[j] < 9) throw InvalidInput("every active block needs dimension >= 9");
    dbar += spec.dims[j];
  }
  const double root = std::sqrt(static_cast<double>(k + 1));
  const double scale = std::pow(static_cast<double>(dbar), gamma);
  const double m_real = std::floor((scale + root) * (scale + root));
  if (!(m_real < 1e18)) throw CapExceeded("weight lattice too large", m_real);
  const auto M = static_cast<std::uint64_t>(m_real);
  const double log2_omega = log2_lattice_size(M, k + 1);

  CompensatedSum acc;
  acc += log2_omega;
  for (std::uint64_t j = 1; j <= k; ++j) {
    const auto dj = static_cast<double>(spec.dims[j - 1]);
    acc += std::log2(rogers_k) + 2.5 * std::log2(dj) + dj * std::log2(spec.semi_axes.evaluate(j) / eps);
  }
  BoundWithCertificate out;
  const double eps_gamma = eps * (1.0 + root / scale);
  out.result = {acc.value(), ResultKind::CertifiedUpper, eps_gamma};
  auto& cert = out.certificate;
  cert.effective_dim = dbar;
  cert.block_sizes.assign(spec.dims.begin(), spec.dims.begin() + static_cast<std::ptrdiff_t>(k));
  cert.inner_radii.assign(k, eps);
  cert.tail_case = "I";
  const auto length = spec.semi_axes.length();
  cert.tail_radius = length && k + 1 > *length ? 0.0 : spec.semi_axes.evaluate(k + 1);
  cert.finite_case = "rogers";
  cert.omega_log2_size = log2_omega;
  cert.omega_rows = 0;
  cert.parametric = true;
  cert.rogers_k = rogers_k;
  cert.gamma = gamma;
  cert.radius_reported = eps_gamma;
  return out;
}

}  // namespace metent
