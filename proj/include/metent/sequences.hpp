#pragma once

// Semi-axis sequences: evaluation, exact threshold comparisons, counting
// functions, partial log-products and certified tail sums.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metent/error.hpp"
#include "metent/numeric.hpp"

namespace metent {

/// mu_n = c * n^(-b).
struct Canonical {
  double b = 1.0;
  double c = 1.0;
};

/// mu_n = c1 * n^(-alpha1) + c2 * n^(-alpha2), alpha1 < alpha2.
struct TwoTermPolynomial {
  double c1 = 1.0;
  double c2 = 0.0;
  double alpha1 = 1.0;
  double alpha2 = 2.0;
};

/// Explicit leading values. Without a tail the sequence is finite (a finite-dimensional
/// ellipsoid); with a tail, mu_n = tail.c * n^(-tail.b) for every n beyond the table.
struct Tabulated {
  std::vector<double> values;
  std::optional<Canonical> tail;
};

/// A validated positive, non-increasing semi-axis sequence.
class SemiAxisModel {
 public:
  using Variant = std::variant<Canonical, TwoTermPolynomial, Tabulated>;

  static SemiAxisModel canonical(double b, double c) { return SemiAxisModel(Canonical{b, c}); }
  static SemiAxisModel two_term(double c1, double c2, double alpha1, double alpha2) {
    return SemiAxisModel(TwoTermPolynomial{c1, c2, alpha1, alpha2});
  }
  static SemiAxisModel table(std::vector<double> values, std::optional<Canonical> tail = std::nullopt) {
    return SemiAxisModel(Tabulated{std::move(values), tail});
  }

  /// Validates on construction; throws InvalidInput on any violated invariant.
  explicit SemiAxisModel(Variant v) : v_(std::move(v)) { validate(); }

  [[nodiscard]] const Variant& variant() const noexcept { return v_; }

  [[nodiscard]] const Canonical* as_canonical() const noexcept { return std::get_if<Canonical>(&v_); }
  [[nodiscard]] const TwoTermPolynomial* as_two_term() const noexcept {
    return std::get_if<TwoTermPolynomial>(&v_);
  }
  [[nodiscard]] const Tabulated* as_table() const noexcept { return std::get_if<Tabulated>(&v_); }

  /// Number of axes, or nullopt for infinite sequences.
  [[nodiscard]] std::optional<std::uint64_t> length() const noexcept {
    if (const auto* t = as_table(); t != nullptr && !t->tail) return t->values.size();
    return std::nullopt;
  }

  /// Index of regular variation (mu_n ~ n^-index); nullopt for finite tables.
  [[nodiscard]] std::optional<double> decay_index() const noexcept {
    if (const auto* c = as_canonical()) return c->b;
    if (const auto* t = as_two_term()) return t->alpha1;
    if (const auto* t = as_table(); t != nullptr && t->tail) return t->tail->b;
    return std::nullopt;
  }

  /// Index from which the sequence is analytically guaranteed positive and
  /// strictly decreasing (two-term models only; 1 otherwise).
  [[nodiscard]] std::uint64_t verified_prefix() const noexcept { return verified_prefix_; }

  [[nodiscard]] double evaluate(std::uint64_t n) const;

 private:
  void validate();

  Variant v_;
  std::uint64_t verified_prefix_ = 1;
};

namespace detail {

inline double canonical_value(const Canonical& m, double n) { return m.c * std::pow(n, -m.b); }

/// b as a small positive integer when it is one; enables exact rational comparisons.
inline std::optional<unsigned> integral_exponent(double b) {
  if (b >= 1.0 && b <= 16.0 && b == std::floor(b)) return static_cast<unsigned>(b);
  return std::nullopt;
}

inline void require_positive_finite(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput(std::string(name) + " must be a positive finite number");
}

}  // namespace detail

inline double SemiAxisModel::evaluate(std::uint64_t n) const {
  if (n == 0) throw InvalidInput("semi-axis index starts at 1");
  const auto nd = static_cast<double>(n);
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Canonical>) {
          return detail::canonical_value(m, nd);
        } else if constexpr (std::is_same_v<T, TwoTermPolynomial>) {
          return m.c1 * std::pow(nd, -m.alpha1) + m.c2 * std::pow(nd, -m.alpha2);
        } else {
          if (n <= m.values.size()) return m.values[n - 1];
          if (!m.tail) {
            throw InvalidInput("index " + std::to_string(n) + " beyond table of length " +
                               std::to_string(m.values.size()));
          }
          return detail::canonical_value(*m.tail, nd);
        }
      },
      v_);
}

inline void SemiAxisModel::validate() {
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Canonical>) {
          detail::require_positive_finite(m.b, "b");
          detail::require_positive_finite(m.c, "c");
        } else if constexpr (std::is_same_v<T, TwoTermPolynomial>) {
          detail::require_positive_finite(m.c1, "c1");
          detail::require_positive_finite(m.alpha1, "alpha1");
          detail::require_positive_finite(m.alpha2, "alpha2");
          if (!std::isfinite(m.c2)) throw InvalidInput("c2 must be finite");
          if (!(m.alpha1 < m.alpha2)) throw InvalidInput("two-term model needs alpha1 < alpha2");
          if (m.c2 >= 0.0) return;  // sum of two decreasing positive terms
          // c2 < 0: positive once n^(a2-a1) > |c2|/c1 and decreasing once
          // n^(a2-a1) > a2|c2|/(a1 c1). Check everything before that explicitly.
          const double gap = m.alpha2 - m.alpha1;
          const double ratio = std::max(-m.c2 / m.c1, m.alpha2 * -m.c2 / (m.alpha1 * m.c1));
          const double analytic_from = std::floor(std::pow(ratio, 1.0 / gap)) + 2.0;
          if (analytic_from > 1e7) throw InvalidInput("two-term model: dominance index too large to verify");
          const auto last = static_cast<std::uint64_t>(analytic_from);
          double prev = std::numeric_limits<double>::infinity();
          for (std::uint64_t n = 1; n <= last; ++n) {
            const double v = evaluate(n);
            if (!(v > 0.0)) throw InvalidInput("two-term model is not positive at n=" + std::to_string(n));
            if (v > prev) throw InvalidInput("two-term model is increasing at n=" + std::to_string(n));
            prev = v;
          }
          verified_prefix_ = last;
        } else {
          if (m.values.empty() && !m.tail) throw InvalidInput("table must not be empty");
          double prev = std::numeric_limits<double>::infinity();
          for (double v : m.values) {
            detail::require_positive_finite(v, "table value");
            if (v > prev) throw InvalidInput("table values must be non-increasing");
            prev = v;
          }
          if (m.tail) {
            detail::require_positive_finite(m.tail->b, "tail b");
            detail::require_positive_finite(m.tail->c, "tail c");
            const double first_tail = detail::canonical_value(*m.tail, static_cast<double>(m.values.size() + 1));
            if (first_tail > prev) throw InvalidInput("canonical tail must not exceed the last table value");
          }
        }
      },
      v_);
}

/// mu_n.
inline double axis(const SemiAxisModel& model, std::uint64_t n) { return model.evaluate(n); }

/// Exact test of mu_n > k * t for integer k and real t > 0.
///
/// Canonical models with a small integer exponent compare in exact rational
/// arithmetic (c > k t n^b); every other case compares the evaluated double
/// against k*t without intermediate rounding.
inline bool axis_exceeds(const SemiAxisModel& model, std::uint64_t n, std::uint64_t k, double t) {
  if (const auto length = model.length(); length && n > *length) return false;
  const Canonical* canon = model.as_canonical();
  if (const auto* table = model.as_table(); table != nullptr && table->tail && n > table->values.size()) {
    canon = &*table->tail;
  }
  if (canon != nullptr) {
    if (const auto e = detail::integral_exponent(canon->b)) {
      // cheap decision away from the boundary, exact comparison near it
      const double approx = canon->c / (t * static_cast<double>(k) * std::pow(static_cast<double>(n), canon->b));
      if (approx > 1.0 + 1e-9) return true;
      if (approx < 1.0 - 1e-9) return false;
      const Rational lhs(canon->c);
      const Rational rhs = Rational(t) * Rational(BigInt(k)) * Rational(big_pow(n, *e));
      return lhs > rhs;
    }
  }
  const double mu = model.evaluate(n);
  if (k < (std::uint64_t{1} << 53)) {
    // sign(k t - mu) without rounding k t first
    return std::fma(static_cast<double>(k), t, -mu) < 0.0;
  }
  return Rational(mu) > Rational(t) * Rational(BigInt(k));
}

/// ceil(mu_n / eps), consistent with axis_exceeds: the smallest m >= 1 with mu_n <= m eps.
inline std::uint64_t axis_ceil_ratio(const SemiAxisModel& model, std::uint64_t n, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  if (const auto length = model.length(); length && n > *length) return 1;
  const double guess = std::ceil(model.evaluate(n) / eps);
  if (!(guess < 0x1p52)) throw CapExceeded("per-axis count mu/eps exceeds 2^52", guess);
  auto m = static_cast<std::uint64_t>(std::max(1.0, guess));
  while (m > 1 && !axis_exceeds(model, n, m - 1, eps)) --m;
  while (axis_exceeds(model, n, m, eps)) ++m;
  return m;
}

/// Default cap on any index scan.
inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 40;

/// M_k(t) = #{n : mu_n > k t}. All supported sequences are non-increasing, so the
/// set is an initial segment and is located by closed form (canonical) or
/// bracketing plus bisection (others).
inline std::uint64_t counting(const SemiAxisModel& model, double t, std::uint64_t k,
                              std::uint64_t cap = kDefaultScanCap) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidInput("t must be a positive finite number");
  if (k == 0) throw InvalidInput("k must be at least 1");
  auto hit = [&](std::uint64_t n) { return n >= 1 && axis_exceeds(model, n, k, t); };
  if (!hit(1)) return 0;

  std::uint64_t lo = 1;  // hit(lo) holds
  std::uint64_t hi = 0;  // !hit(hi) holds once set
  if (const auto length = model.length()) {
    hi = *length + 1;
  } else {
    if (const auto* c = model.as_canonical()) {
      const double guess = std::pow(c->c / (static_cast<double>(k) * t), 1.0 / c->b);
      if (!(guess < static_cast<double>(cap))) throw CapExceeded("counting function exceeds scan cap", guess);
      const auto g = static_cast<std::uint64_t>(std::max(1.0, std::floor(guess)));
      if (hit(g) && !hit(g + 1)) return g;
    }
    hi = 2;
    while (hit(hi)) {
      lo = hi;
      if (hi > cap / 2) throw CapExceeded("counting function exceeds scan cap", static_cast<double>(hi));
      hi *= 2;
    }
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (hit(mid) ? lo : hi) = mid;
  }
  return lo;
}

/// True when axis(n) >= axis(n+1) for all n < upto.
inline bool is_non_increasing_up_to(const SemiAxisModel& model, std::uint64_t upto) {
  if (const auto length = model.length()) upto = std::min<std::uint64_t>(upto, *length);
  for (std::uint64_t n = 1; n < upto; ++n) {
    if (model.evaluate(n) < model.evaluate(n + 1)) return false;
  }
  return true;
}

/// sum_{n<=d} log2 mu_n.
inline double log_product(const SemiAxisModel& model, std::uint64_t d) {
  if (d == 0) throw InvalidInput("d must be at least 1");
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= d; ++n) acc += std::log2(model.evaluate(n));
  return acc.value();
}

/// (1/N) sum_{n<=N} log2(mu_n / mu_N).
inline double cesaro_log_ratio(const SemiAxisModel& model, std::uint64_t N) {
  if (N == 0) throw InvalidInput("N must be at least 1");
  const double last = model.evaluate(N);
  CompensatedSum acc;
  for (std::uint64_t n = 1; n < N; ++n) acc += std::log2(model.evaluate(n) / last);
  return acc.value() / static_cast<double>(N);
}

namespace detail {

/// Bracket for sum_{n>m} (A n^-a)^theta = A^theta sum_{n>m} n^-s, s = a theta > 1.
inline Interval power_tail_bracket(double A, double a, double theta, std::uint64_t m) {
  const double s = a * theta;
  const double x = static_cast<double>(m) + 1.0;
  const double scale = std::pow(A, theta);
  const double integral = std::pow(x, 1.0 - s) / (s - 1.0);
  return {scale * integral, scale * (std::pow(x, -s) + integral)};
}

inline constexpr std::uint64_t kTailHeadTerms = 2000;

inline Interval widen(Interval iv) {
  constexpr double rel = 1e-13;
  return {iv.lower * (1.0 - rel), iv.upper * (1.0 + rel)};
}

}  // namespace detail

/// Certified bracket for sum_{n>d} mu_n^theta: a block of terms is summed
/// explicitly, the remainder is bounded by integral comparison.
inline Interval tail_power_sum(const SemiAxisModel& model, std::uint64_t d, double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidInput("theta must be a positive finite number");
  if (const auto length = model.length()) {
    CompensatedSum acc;
    for (std::uint64_t n = d + 1; n <= *length; ++n) acc += std::pow(model.evaluate(n), theta);
    const double v = acc.value();
    return detail::widen({v, v});
  }
  const double index = *model.decay_index();
  if (!(index * theta > 1.0)) {
    throw NonCompactRegime("tail sum diverges: decay index times theta must exceed 1");
  }
  std::uint64_t head_end = d + detail::kTailHeadTerms;
  if (const auto* tab = model.as_table()) head_end = std::max<std::uint64_t>(head_end, tab->values.size());
  if (model.as_two_term() != nullptr) {
    head_end = std::max<std::uint64_t>(head_end, model.verified_prefix() + detail::kTailHeadTerms);
  }
  CompensatedSum head;
  for (std::uint64_t n = d + 1; n <= head_end; ++n) head += std::pow(model.evaluate(n), theta);

  Interval rest;
  if (const auto* c = model.as_canonical()) {
    rest = detail::power_tail_bracket(c->c, c->b, theta, head_end);
  } else if (const auto* tab = model.as_table()) {
    rest = detail::power_tail_bracket(tab->tail->c, tab->tail->b, theta, head_end);
  } else {
    // for n > m: mu_n = (c1 + c2 n^(a1-a2)) n^-a1 with n^(a1-a2) in (0, (m+1)^(a1-a2)]
    const auto* tt = model.as_two_term();
    const double edge = tt->c1 + tt->c2 * std::pow(static_cast<double>(head_end) + 1.0, tt->alpha1 - tt->alpha2);
    const double lo_coef = std::min(tt->c1, edge);
    const double hi_coef = std::max(tt->c1, edge);
    rest = {detail::power_tail_bracket(lo_coef, tt->alpha1, theta, head_end).lower,
            detail::power_tail_bracket(hi_coef, tt->alpha1, theta, head_end).upper};
  }
  const double h = head.value();
  return detail::widen({h + rest.lower, h + rest.upper});
}

}  // namespace metent
