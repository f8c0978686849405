#pragma once

// Special functions and universal constants: log-gamma, zeta, Gamma_{p,q},
// unit-ball volumes and the zeta-series constant of the sup-norm hyperrectangle.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/numeric.hpp"

namespace metent {

namespace detail {

// B_{2k} for k = 1..12
inline constexpr std::array<double, 12> kBernoulliEven = {
    1.0 / 6.0,        -1.0 / 30.0,      1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,  7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0, 854513.0 / 138.0,   -236364091.0 / 2730.0,
};

/// sum_{n>=N} n^-s by Euler-Maclaurin at the cut N (s > 1, N >= 1).
/// Returns the sum and the magnitude of the first omitted correction.
inline std::pair<double, double> power_sum_from(double s, double N) {
  double value = std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
  // derivative chain: f^{(2k-1)}(N) = -s(s+1)...(s+2k-2) N^{-s-2k+1}
  double rising = s;  // s(s+1)...(s+2k-2)
  double factorial = 2.0;  // (2k)!
  double npow = std::pow(N, -s - 1.0);
  double last = 0.0;
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    const double term = kBernoulliEven[k - 1] / factorial * rising * npow;
    if (k == kBernoulliEven.size()) {
      last = std::abs(term);
      break;
    }
    value += term;
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    npow /= N * N;
  }
  return {value, last};
}

}  // namespace detail

/// ln Gamma(x) for x > 0: upward recurrence to x >= 15, then the Stirling series.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("log_gamma needs a positive finite argument");
  if (x == 1.0 || x == 2.0) return 0.0;
  double shift = 0.0;
  double prod = 1.0;
  while (x < 15.0) {
    prod *= x;
    x += 1.0;
    if (prod > 1e280) {
      shift += std::log(prod);
      prod = 1.0;
    }
  }
  shift += std::log(prod);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (std::size_t k = 1; k <= 8; ++k) {
    series += detail::kBernoulliEven[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

/// Riemann zeta for real s > 1.
inline double zeta(double s) {
  if (!(s > 1.0)) throw InvalidInput("zeta needs s > 1");
  constexpr int cut = 20;
  CompensatedSum acc;
  for (int n = cut - 1; n >= 1; --n) acc += std::pow(static_cast<double>(n), -s);
  acc += detail::power_sum_from(s, cut).first;
  return acc.value();
}

/// zeta(s) - 1, accurate also when s is large.
inline double zeta_minus_one(double s) {
  if (!(s > 1.0)) throw InvalidInput("zeta needs s > 1");
  constexpr int cut = 20;
  CompensatedSum acc;
  for (int n = cut - 1; n >= 2; --n) acc += std::pow(static_cast<double>(n), -s);
  acc += detail::power_sum_from(s, cut).first;
  return acc.value();
}

/// ln of Gamma(1/p + 1) p^(1/p), with the p = inf limit 0.
inline double log_gamma_norm_factor(const HolderExponent& p) {
  if (p.is_infinite()) return 0.0;
  const double r = p.reciprocal();
  return log_gamma(r + 1.0) + r * std::log(p.value());
}

/// Gamma_{p,q} = Gamma(1/p+1) p^(1/p) / (Gamma(1/q+1) q^(1/q) e^(1/q-1/p)).
inline double gamma_pq(const HolderExponent& p, const HolderExponent& q) {
  if (p == q) return 1.0;
  return std::exp(log_gamma_norm_factor(p) - log_gamma_norm_factor(q) - (q.reciprocal() - p.reciprocal()));
}

/// ln vol(B_p^d) = d ln(2 Gamma(1 + 1/p)) - ln Gamma(1 + d/p).
inline double unit_ball_log_volume(const HolderExponent& p, std::uint64_t d) {
  if (d == 0) throw InvalidInput("dimension must be at least 1");
  const auto dd = static_cast<double>(d);
  if (p.is_infinite()) return dd * std::numbers::ln2;
  if (p.value() == 2.0) return 0.5 * dd * std::log(std::numbers::pi) - log_gamma(0.5 * dd + 1.0);
  const double r = p.reciprocal();
  return dd * (std::numbers::ln2 + log_gamma(1.0 + r)) - log_gamma(1.0 + dd * r);
}

/// V_{p,q,d} = (vol B_p^d / vol B_q^d)^(1/d).
inline double volume_ratio(const HolderExponent& p, const HolderExponent& q, std::uint64_t d) {
  if (p == q) return 1.0;
  return std::exp((unit_ball_log_volume(p, d) - unit_ball_log_volume(q, d)) / static_cast<double>(d));
}

struct SeriesValue {
  double value = 0.0;
  double remainder_bound = 0.0;  ///< bound on |true - value| from truncation
};

/// S(b) = sum_k log2(1 + 1/k) k^(-1/b).
///
/// The first `kHead` terms are summed directly. Beyond that ln(1 + 1/k) is
/// expanded in powers of 1/k, which turns the remainder into an alternating
/// combination of Hurwitz-type tails sum_{k>K} k^-(j+s), each by Euler-Maclaurin.
inline SeriesValue zeta_series_constant_detailed(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidInput("b must be a positive finite number");
  constexpr std::uint64_t kHead = 1000;
  const double s = 1.0 / b;
  CompensatedSum acc;
  for (std::uint64_t k = kHead; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    acc += std::log1p(1.0 / kd) * std::pow(kd, -s);
  }
  double em_error = 0.0;
  double omitted = 0.0;
  constexpr int kTerms = 8;
  CompensatedSum tail;
  for (int j = 1; j <= kTerms + 1; ++j) {
    const auto [z, err] = detail::power_sum_from(j + s, static_cast<double>(kHead + 1));
    const double term = (j % 2 == 1 ? 1.0 : -1.0) * z / j;
    if (j == kTerms + 1) {
      omitted = std::abs(term);
      break;
    }
    tail += term;
    em_error += err / j;
  }
  acc += tail.value();
  const double bound = (omitted + em_error) / std::numbers::ln2 + 1e-15 * acc.value();
  if (bound > 1e-10) throw InvalidInput("zeta series remainder bound not met");
  return {acc.value() / std::numbers::ln2, bound};
}

inline double zeta_series_constant(double b) { return zeta_series_constant_detailed(b).value; }

/// Cross-check route: (1/ln2) sum_l (-1)^(l+1) zeta(l + 1/b) / l, with the
/// k = 1 column split off (it contributes ln 2) so that the rest converges
/// geometrically.
inline double zeta_series_constant_alternating(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidInput("b must be a positive finite number");
  const double s = 1.0 / b;
  CompensatedSum acc;
  acc += std::numbers::ln2;
  for (int l = 1; l <= 200; ++l) {
    const double term = zeta_minus_one(l + s) / l;
    acc += (l % 2 == 1 ? term : -term);
    if (term < 1e-20) break;
  }
  return acc.value() / std::numbers::ln2;
}

}  // namespace metent
