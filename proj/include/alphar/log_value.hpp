#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>

namespace alphar {

/// A signed real stored as (sign, ln|value|). Expectations in this library
/// routinely overflow double (C(n,k) for n ~ 1e10) or underflow it
/// (2^{-C(k,2)}), so they travel in this form until a caller asks for a
/// plain number.
class LogValue {
 public:
  constexpr LogValue() = default;

  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() { return LogValue(1, 0.0); }
  static LogValue from_log(double log_magnitude, int sign = 1);
  static LogValue from_double(double value);

  int sign() const noexcept { return sign_; }
  /// ln|value|; -inf for zero.
  double log() const noexcept {
    return sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_magnitude_;
  }
  double log2() const noexcept;
  bool is_zero() const noexcept { return sign_ == 0; }
  double to_double() const noexcept;

  LogValue operator-() const noexcept { return LogValue(-sign_, log_magnitude_); }
  LogValue& operator*=(const LogValue& rhs) noexcept;
  LogValue& operator/=(const LogValue& rhs);
  LogValue& operator+=(const LogValue& rhs) noexcept;
  LogValue& operator-=(const LogValue& rhs) noexcept { return *this += -rhs; }

  friend LogValue operator*(LogValue a, const LogValue& b) noexcept { return a *= b; }
  friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
  friend LogValue operator+(LogValue a, const LogValue& b) noexcept { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) noexcept { return a -= b; }

  friend std::partial_ordering operator<=>(const LogValue& a, const LogValue& b) noexcept;
  friend bool operator==(const LogValue& a, const LogValue& b) noexcept {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_magnitude_ == b.log_magnitude_);
  }

  /// Real power of a nonnegative value; pow(0, 0) = 1.
  LogValue pow(double exponent) const;

 private:
  constexpr LogValue(int sign, double log_magnitude) : sign_(sign), log_magnitude_(log_magnitude) {}

  int sign_ = 0;
  double log_magnitude_ = 0.0;
};

/// Compensated sum of many terms of possibly wildly different scales.
LogValue log_sum(std::span<const LogValue> terms);

}  // namespace alphar
