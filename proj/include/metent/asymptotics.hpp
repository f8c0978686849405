#pragma once

// Regime classification, asymptotic evaluators for the canonical and Hilbert
// cases, effective dimensions and the expansion/inversion helpers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

#include "metent/constants.hpp"
#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/numeric.hpp"
#include "metent/sequences.hpp"

namespace metent {

enum class RegimeCase { NonCompact_a, NonCompact_b, Critical_ii, Compact_iii, Compact_iv };

inline std::string to_string(RegimeCase c) {
  switch (c) {
    case RegimeCase::NonCompact_a: return "NonCompact_a";
    case RegimeCase::NonCompact_b: return "NonCompact_b";
    case RegimeCase::Critical_ii: return "Critical_ii";
    case RegimeCase::Compact_iii: return "Compact_iii";
    case RegimeCase::Compact_iv: return "Compact_iv";
  }
  return "unknown";
}

struct Regime {
  RegimeCase regime = RegimeCase::Compact_iii;
  double b_star = 0.0;  ///< b + 1/p - 1/q
  std::optional<double> lower_const;
  std::optional<double> upper_const;
  std::optional<double> exact_const;  ///< p = q = 2 only

  [[nodiscard]] bool compact() const noexcept {
    return regime != RegimeCase::NonCompact_a && regime != RegimeCase::NonCompact_b;
  }
};

/// Position of q relative to the critical exponent p/(pb+1), decided exactly:
/// q < p/(pb+1) iff 1/q > 1/p + b. Returns -1, 0, +1 for q below, on, above.
inline int critical_side(const HolderExponent& p, const HolderExponent& q, const Rational& b) {
  const Rational lhs = p.exact_reciprocal() + b;
  const Rational inv_q = q.exact_reciprocal();
  if (inv_q > lhs) return -1;
  if (inv_q == lhs) return 0;
  return 1;
}

/// gamma_{p,q,b} = (b / b*)^{1/q - 1/p}.
inline double gamma_pqb(const HolderExponent& p, const HolderExponent& q, double b) {
  const double b_star = b + p.reciprocal() - q.reciprocal();
  return std::pow(b / b_star, q.reciprocal() - p.reciprocal());
}

/// Classification with b given exactly. The flags describe sum_n mu_n^{1/b}
/// (finite?) and liminf n mu_n^{1/b} (> 0?); they only matter on the critical line.
inline Regime classify(const HolderExponent& p, const HolderExponent& q, const Rational& b_exact,
                       bool tail_summable_inv_b, bool liminf_n_mu_pos) {
  if (b_exact <= 0) throw InvalidInput("b must be positive");
  const auto b = static_cast<double>(b_exact);
  Regime r;
  r.b_star = static_cast<double>(b_exact + p.exact_reciprocal() - q.exact_reciprocal());
  const double g = gamma_pq(p, q);
  const int side = critical_side(p, q, b_exact);
  if (side < 0) {
    r.regime = RegimeCase::NonCompact_a;
  } else if (side == 0) {
    if (liminf_n_mu_pos) {
      r.regime = RegimeCase::NonCompact_b;
    } else if (tail_summable_inv_b) {
      r.regime = RegimeCase::Critical_ii;
      r.lower_const = g;
    } else {
      throw InvalidInput("unsupported corner: critical exponent with a non-summable, vanishing tail");
    }
  } else if (q <= p) {
    r.regime = RegimeCase::Compact_iii;
    r.lower_const = g * std::pow(b / std::numbers::ln2, r.b_star);
    r.upper_const = gamma_pqb(p, q, b) * std::pow(b / std::numbers::ln2 + 1.0, r.b_star);
    if (!p.is_infinite() && !q.is_infinite() && p.value() == 2.0 && q.value() == 2.0) {
      r.exact_const = std::pow(b / std::numbers::ln2, b);
    }
  } else {
    r.regime = RegimeCase::Compact_iv;
    r.lower_const = g * std::pow(b / std::numbers::ln2, r.b_star);
  }
  return r;
}

inline Regime classify(const HolderExponent& p, const HolderExponent& q, double b, bool tail_summable_inv_b,
                       bool liminf_n_mu_pos) {
  if (!(b > 0.0) || !std::isfinite(b)) throw InvalidInput("b must be a positive finite number");
  return classify(p, q, Rational(b), tail_summable_inv_b, liminf_n_mu_pos);
}

/// Canonical sequences on the critical line always have n mu_n^{1/b} = c^{1/b} > 0.
inline Regime classify_canonical(const HolderExponent& p, const HolderExponent& q, double b) {
  return classify(p, q, b, false, true);
}

struct Band {
  double lower = 0.0;
  double upper = 0.0;
  bool upper_order_only = false;  ///< upper edge is a growth order with unconfirmed constant
  RegimeCase regime = RegimeCase::Compact_iii;
  double b_star = 0.0;
};

/// Leading-term band for the canonical model mu_n = c n^{-b}:
/// [(b/ln2)(Gamma_{p,q} c/eps)^{1/b*}, (b/ln2 + 1)(gamma_{p,q,b} c/eps)^{1/b*}].
/// For p < q only the lower edge is two-sided material; the upper edge is
/// eps^{-1/b*} log2 log2(1/eps) (b >= 1) or eps^{-1/b*} log2(1/eps)^{1-b} (b < 1).
inline Band canonical_band(const HolderExponent& p, const HolderExponent& q, double b, double c, double eps) {
  if (!(c > 0.0) || !(eps > 0.0)) throw InvalidInput("c and eps must be positive");
  const Regime r = classify_canonical(p, q, b);
  if (!r.compact()) throw NonCompactRegime("ellipsoid is not compact: regime " + to_string(r.regime));
  Band out;
  out.regime = r.regime;
  out.b_star = r.b_star;
  const double inv = 1.0 / r.b_star;
  out.lower = b / std::numbers::ln2 * std::pow(gamma_pq(p, q) * c / eps, inv);
  if (r.regime == RegimeCase::Compact_iii) {
    out.upper = (b / std::numbers::ln2 + 1.0) * std::pow(gamma_pqb(p, q, b) * c / eps, inv);
  } else {
    const double l = std::log2(1.0 / eps);
    out.upper = std::pow(eps, -inv) * (b >= 1.0 ? std::log2(std::max(l, 2.0)) : std::pow(l, 1.0 - b));
    out.upper_order_only = true;
  }
  return out;
}

/// (b c^{1/b} / ln2) eps^{-1/b}.
inline double hilbert_leading(double b, double c, double eps) {
  if (!(b > 0.0) || !(c > 0.0) || !(eps > 0.0)) throw InvalidInput("b, c and eps must be positive");
  return b * std::pow(c, 1.0 / b) / std::numbers::ln2 * std::pow(eps, -1.0 / b);
}

/// Two-term expansion for mu_n = c1 n^{-a1} + c2 n^{-a2}, a1 < a2 < a1 + 1/2.
inline double hilbert_second_order(double alpha1, double alpha2, double c1, double c2, double eps) {
  if (!(alpha1 > 0.0) || !(c1 > 0.0) || !(eps > 0.0)) throw InvalidInput("alpha1, c1 and eps must be positive");
  if (!(alpha1 < alpha2 && alpha2 < alpha1 + 0.5)) throw InvalidInput("need alpha1 < alpha2 < alpha1 + 1/2");
  const double a = alpha1 - alpha2 + 1.0;
  const double first = alpha1 * std::pow(c1, 1.0 / alpha1) / std::numbers::ln2 * std::pow(eps, -1.0 / alpha1);
  const double second = c2 * std::pow(c1, (1.0 - alpha2) / alpha1) / (std::numbers::ln2 * a) * std::pow(eps, -a / alpha1);
  return first + second;
}

/// sum_{n <= d*} log2(mu_n / eps), d* = #{n : mu_n > eps}.
inline double entropy_estimator(const SemiAxisModel& model, double eps, std::uint64_t cap = kDefaultScanCap) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const std::uint64_t d = counting(model, eps, 1, cap);
  CompensatedSum acc;
  const double l = std::log2(eps);
  for (std::uint64_t n = 1; n <= d; ++n) acc += std::log2(model.evaluate(n)) - l;
  return acc.value();
}

/// max{d : d^{1/q-1/p} mu_d > eps}, 0 when no such d.
inline std::uint64_t effective_dimension(const SemiAxisModel& model, const HolderExponent& p, const HolderExponent& q,
                                         double eps, std::uint64_t cap = 100'000'000) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  const double r = q.reciprocal() - p.reciprocal();
  auto surrogate = [&](std::uint64_t d) { return std::pow(static_cast<double>(d), r) * model.evaluate(d); };
  if (const auto length = model.length()) {
    std::uint64_t best = 0;
    for (std::uint64_t d = 1; d <= *length; ++d) {
      if (surrogate(d) > eps) best = d;
    }
    return best;
  }
  const double b = *model.decay_index();
  if (!(b > r)) throw NonCompactRegime("effective-dimension surrogate does not decay");
  // Beyond an envelope index the surrogate is provably below eps.
  double envelope_coef = 0.0;
  std::uint64_t envelope_from = 1;
  if (const auto* c = model.as_canonical()) {
    envelope_coef = c->c;
  } else if (const auto* t = model.as_two_term()) {
    envelope_coef = t->c1 + std::max(0.0, t->c2);
  } else {
    const auto* tab = model.as_table();
    envelope_coef = tab->tail->c;
    envelope_from = tab->values.size() + 1;
  }
  const double bound = std::pow(envelope_coef / eps, 1.0 / (b - r));
  if (!(bound < static_cast<double>(cap))) throw CapExceeded("effective dimension scan exceeds cap", bound);
  const std::uint64_t last = std::max<std::uint64_t>(envelope_from, static_cast<std::uint64_t>(bound) + 1);
  if (model.as_canonical() != nullptr) {
    // c d^{r-b} is strictly decreasing: locate the crossing near the closed form
    std::uint64_t d = static_cast<std::uint64_t>(bound);
    while (d > 0 && !(surrogate(d) > eps)) --d;
    while (d + 1 <= last && surrogate(d + 1) > eps) ++d;
    return d;
  }
  std::uint64_t best = 0;
  for (std::uint64_t d = 1; d <= last; ++d) {
    if (surrogate(d) > eps) best = d;
  }
  return best;
}

struct ExpansionCheck {
  double exact = 0.0;
  double approx = 0.0;
};

/// exact = sum_{n<=d} log2(mu_n/mu_d); approx = a1 d/ln2 + (1/a - 1) c2/(c1 ln2) d^a, a = a1 - a2 + 1.
inline ExpansionCheck sum_expansion_check(double alpha1, double alpha2, double c1, double c2, std::uint64_t d) {
  const double a = alpha1 - alpha2 + 1.0;
  if (!(a > 0.0)) throw InvalidInput("need alpha1 - alpha2 + 1 > 0");
  if (d == 0) throw InvalidInput("d must be at least 1");
  const SemiAxisModel m = SemiAxisModel::two_term(c1, c2, alpha1, alpha2);
  const auto dd = static_cast<double>(d);
  ExpansionCheck out;
  out.exact = cesaro_log_ratio(m, d) * dd;
  out.approx = alpha1 * dd / std::numbers::ln2 + (1.0 / a - 1.0) * c2 / (c1 * std::numbers::ln2) * std::pow(dd, a);
  return out;
}

/// Approximate solution u of c1 u^{-a1} + c2 u^{-a2} = g for small g.
inline double invert_series(double alpha1, double alpha2, double c1, double c2, double g) {
  if (!(alpha1 > 0.0) || !(c1 > 0.0) || !(g > 0.0)) throw InvalidInput("alpha1, c1 and g must be positive");
  const double a = alpha1 - alpha2 + 1.0;
  return std::pow(c1, 1.0 / alpha1) * std::pow(g, -1.0 / alpha1) +
         c2 * std::pow(c1, (1.0 - alpha2) / alpha1) / alpha1 * std::pow(g, -a / alpha1);
}

}  // namespace metent
