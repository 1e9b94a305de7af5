#include "alphar/log_value.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphar/errors.hpp"

namespace alphar {

LogValue LogValue::from_log(double log_magnitude, int sign) {
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return zero();
  if (std::isnan(log_magnitude)) throw RangeError("LogValue: NaN log magnitude");
  return LogValue(sign > 0 ? 1 : -1, log_magnitude);
}

LogValue LogValue::from_double(double value) {
  if (std::isnan(value)) throw RangeError("LogValue: NaN");
  if (value == 0.0) return zero();
  return LogValue(value > 0 ? 1 : -1, std::log(std::fabs(value)));
}

double LogValue::log2() const noexcept { return log() / std::numbers::ln2; }

double LogValue::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_magnitude_);
}

LogValue& LogValue::operator*=(const LogValue& rhs) noexcept {
  if (sign_ == 0 || rhs.sign_ == 0) {
    *this = zero();
    return *this;
  }
  sign_ *= rhs.sign_;
  log_magnitude_ += rhs.log_magnitude_;
  return *this;
}

LogValue& LogValue::operator/=(const LogValue& rhs) {
  if (rhs.sign_ == 0) throw RangeError("LogValue: division by zero");
  if (sign_ == 0) return *this;
  sign_ *= rhs.sign_;
  log_magnitude_ -= rhs.log_magnitude_;
  return *this;
}

LogValue& LogValue::operator+=(const LogValue& rhs) noexcept {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  const double hi = std::max(log_magnitude_, rhs.log_magnitude_);
  const double lo = std::min(log_magnitude_, rhs.log_magnitude_);
  const int hi_sign = log_magnitude_ >= rhs.log_magnitude_ ? sign_ : rhs.sign_;
  if (sign_ == rhs.sign_) {
    log_magnitude_ = hi + std::log1p(std::exp(lo - hi));
    return *this;
  }
  if (hi == lo) {
    *this = zero();
    return *this;
  }
  sign_ = hi_sign;
  log_magnitude_ = hi + std::log1p(-std::exp(lo - hi));
  return *this;
}

std::partial_ordering operator<=>(const LogValue& a, const LogValue& b) noexcept {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  if (a.sign_ > 0) return a.log_magnitude_ <=> b.log_magnitude_;
  return b.log_magnitude_ <=> a.log_magnitude_;
}

LogValue LogValue::pow(double exponent) const {
  if (sign_ < 0) throw RangeError("LogValue::pow of a negative value");
  if (exponent == 0.0) return one();
  if (sign_ == 0) {
    if (exponent < 0) throw RangeError("LogValue::pow: zero to a negative power");
    return zero();
  }
  return LogValue(1, log_magnitude_ * exponent);
}

LogValue log_sum(std::span<const LogValue> terms) {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (!t.is_zero()) hi = std::max(hi, t.log());
  if (hi == -std::numeric_limits<double>::infinity()) return LogValue::zero();

  // Kahan summation of the terms rescaled by the largest magnitude.
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const double y = t.sign() * std::exp(t.log() - hi) - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  if (sum == 0.0) return LogValue::zero();
  return LogValue::from_log(hi + std::log(std::fabs(sum)), sum > 0 ? 1 : -1);
}

}  // namespace alphar
