#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "metent/error.hpp"

namespace metent {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exponent p in [1, inf]. Infinity is a distinct state, never a large float, so
/// that 1/p is exactly zero there.
class HolderExponent {
 public:
  /// Finite exponent; throws InvalidInput unless value >= 1.
  explicit HolderExponent(double value) : value_(value), infinite_(false) {
    if (!(value >= 1.0) || !std::isfinite(value)) {
      throw InvalidInput("Hoelder exponent must be a finite number >= 1 (use infinity() for inf)");
    }
  }

  /// Finite exponent given exactly, e.g. parsed from "4/3"; keeps 1/p exact.
  explicit HolderExponent(const Rational& exact)
      : HolderExponent(static_cast<double>(exact)) {
    if (exact < 1) throw InvalidInput("Hoelder exponent must be >= 1");
    exact_ = exact;
    has_exact_ = true;
  }

  static HolderExponent infinity() { return HolderExponent(); }

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }

  /// The finite value; +inf for the infinite exponent.
  [[nodiscard]] double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  [[nodiscard]] double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Exact reciprocal of the stored double (0 for infinity).
  [[nodiscard]] Rational exact_reciprocal() const {
    if (infinite_) return Rational(0);
    if (has_exact_) return Rational(1) / exact_;
    return Rational(1) / Rational(value_);
  }

  [[nodiscard]] std::string to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(value_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  friend bool operator==(const HolderExponent& a, const HolderExponent& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  /// Ordered by value with infinity largest.
  friend std::partial_ordering operator<=>(const HolderExponent& a, const HolderExponent& b) noexcept {
    return a.value() <=> b.value();
  }

 private:
  HolderExponent() : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
  Rational exact_;
  bool has_exact_ = false;
};

/// Parses "inf" / "infinity" or a number >= 1.
inline HolderExponent parse_holder_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
    return HolderExponent::infinity();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse exponent '" + text + "'");
  }
  if (used != text.size()) throw InvalidInput("cannot parse exponent '" + text + "'");
  if (std::isinf(v)) return HolderExponent::infinity();
  return HolderExponent(v);
}

}  // namespace metent
