#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "metent/error.hpp"
#include "metent/holder_exponent.hpp"

namespace metent {

inline constexpr double kLn2 = std::numbers::ln2;

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Closed real interval [lower, upper].
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  [[nodiscard]] bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  [[nodiscard]] double width() const noexcept { return upper - lower; }
};

/// log2 of a positive big integer, accurate to double precision.
inline double log2_bigint(const BigInt& x) {
  if (x <= 0) throw InvalidInput("log2 of non-positive integer");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 62) return std::log2(static_cast<double>(static_cast<std::uint64_t>(x)));
  const std::size_t shift = msb - 62;
  const auto top = static_cast<std::uint64_t>(BigInt(x >> shift));
  return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

/// Product of integers by balanced splitting; keeps the operands of each
/// multiplication about the same size.
inline BigInt product_tree(std::span<const BigInt> factors) {
  if (factors.empty()) return BigInt(1);
  if (factors.size() == 1) return factors.front();
  const std::size_t mid = factors.size() / 2;
  return product_tree(factors.first(mid)) * product_tree(factors.subspan(mid));
}

inline BigInt product_tree(const std::vector<std::uint64_t>& factors) {
  std::vector<BigInt> big(factors.begin(), factors.end());
  return product_tree(std::span<const BigInt>(big));
}

/// Integer power with exact big-integer result.
inline BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

/// Parses a decimal ("0.3", "1e-4") or fraction ("1/3") literal into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { return InvalidInput("cannot parse number '" + text + "'"); };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  long long scale = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      mantissa = mantissa * 10 + (ch - '0');
      if (after_point) --scale;
      any_digit = true;
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    std::size_t used = 0;
    long long exp10 = 0;
    try {
      exp10 = std::stoll(text.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != text.size() - pos - 1) throw fail();
    scale += exp10;
  }
  if (scale > 4000 || scale < -4000) throw fail();
  Rational value(mantissa);
  const BigInt power = big_pow(10, static_cast<std::uint64_t>(scale < 0 ? -scale : scale));
  value = scale < 0 ? value / Rational(power) : value * Rational(power);
  return negative ? Rational(-value) : value;
}

/// q-norm of a vector; max-norm when q is infinite.
inline double q_norm(std::span<const double> x, const HolderExponent& q) {
  if (q.is_infinite()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  const double qv = q.value();
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  CompensatedSum acc;
  for (double v : x) acc += std::pow(std::abs(v) / scale, qv);
  return scale * std::pow(acc.value(), 1.0 / qv);
}

}  // namespace metent
