#include "alphar/logmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "alphar/errors.hpp"

namespace alphar {
namespace {

__extension__ typedef unsigned __int128 Uint128;

constexpr std::int64_t kExactLimit = 64;
constexpr std::int64_t kDirectSumLimit = 4096;

double ln2_times(std::int64_t m) { return static_cast<double>(m) * std::numbers::ln2; }

// ln C(n, m) for small m by a compensated sum of ln((n-m+i)/i).
double log_binomial_small_side(std::int64_t n, std::int64_t m) {
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const double term = std::log(static_cast<double>(n - m + i)) - std::log(static_cast<double>(i));
    const double y = term - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  return sum;
}

}  // namespace

std::optional<std::uint64_t> exact_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kExactLimit + 3) return std::nullopt;
  k = std::min(k, n - k);
  Uint128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<Uint128>(n - k + i) / static_cast<Uint128>(i);
  }
  if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(acc);
}

LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return LogValue::zero();
  if (n <= kExactLimit) {
    return LogValue::from_log(std::log(static_cast<double>(*exact_binomial(n, k))));
  }
  const std::int64_t m = std::min(k, n - k);
  if (m <= kDirectSumLimit) return LogValue::from_log(log_binomial_small_side(n, m));
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return LogValue::from_log(std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1));
}

LogValue expected_independent_sets(std::int64_t n, std::int64_t k) {
  return expected_defect_sets(n, k, 0);
}

LogValue expected_defect_sets(std::int64_t n, std::int64_t k, std::int64_t i) {
  if (k < 0 || k > n) return LogValue::zero();
  const std::int64_t p = pairs(k);
  if (i < 0 || i > p) return LogValue::zero();
  return log_binomial(n, k) * log_binomial(p, i) * LogValue::from_log(-ln2_times(p));
}

LogValue defect_ratio(std::int64_t k, std::int64_t i) {
  if (k < 1) throw RangeError("defect_ratio: k must be >= 1");
  const std::int64_t p = pairs(k + 1);
  if (i < 0 || i >= p) throw RangeError("defect_ratio: i must satisfy 0 <= i < C(k+1,2)");
  return LogValue::from_double(static_cast<double>(p - i)) /
         LogValue::from_double(static_cast<double>(i + 1));
}

LogValue log_poisson_pmf(double lambda, std::int64_t t) {
  if (lambda < 0 || std::isnan(lambda)) throw RangeError("poisson: lambda must be >= 0");
  if (t < 0) return LogValue::zero();
  if (lambda == 0.0) return t == 0 ? LogValue::one() : LogValue::zero();
  const double td = static_cast<double>(t);
  return LogValue::from_log(-lambda + td * std::log(lambda) - std::lgamma(td + 1));
}

double poisson_pmf(double lambda, std::int64_t t) { return log_poisson_pmf(lambda, t).to_double(); }

double poisson_tail(double lambda, std::int64_t t) {
  if (lambda < 0 || std::isnan(lambda)) throw RangeError("poisson: lambda must be >= 0");
  if (t <= 0) return 1.0;
  if (lambda == 0.0) return 0.0;
  if (lambda < static_cast<double>(t)) {
    // Upper tail directly; terms decay at least geometrically past the mode.
    double sum = 0.0;
    double term = poisson_pmf(lambda, t);
    for (std::int64_t s = t; term > 0.0; ++s) {
      sum += term;
      if (term < sum * 1e-18) break;
      term *= lambda / static_cast<double>(s + 1);
    }
    return std::min(sum, 1.0);
  }
  double head = 0.0;
  for (std::int64_t s = 0; s < t; ++s) head += poisson_pmf(lambda, s);
  return std::clamp(1.0 - head, 0.0, 1.0);
}

LogValue overlap_sum(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw RangeError("overlap_sum: need 1 <= k <= n");
  std::vector<LogValue> terms;
  const LogValue scale = log_binomial(n, k) * LogValue::from_log(-ln2_times(2 * pairs(k)));
  for (std::int64_t j = 1; j <= k - 1; ++j) {
    terms.push_back(log_binomial(k, j) * log_binomial(n - k, k - j) *
                    LogValue::from_log(ln2_times(pairs(j))));
  }
  return scale * log_sum(terms);
}

LogValue stein_chen_bound(std::int64_t n, std::int64_t k, std::int64_t i) {
  if (n < 0 || k < 0 || k > n || i < 0) throw RangeError("stein_chen_bound: invalid (n,k,i)");
  const std::int64_t p_k = pairs(k);
  if (i > p_k) return LogValue::zero();

  const LogValue sets = log_binomial(n, k);
  const LogValue p = log_binomial(p_k, i) * LogValue::from_log(-ln2_times(p_k));

  // Overlap sizes j with a dependent partner: j = k (the set itself) and 2 <= j <= k-1.
  std::vector<LogValue> neighbourhood;
  std::vector<LogValue> joint;
  for (std::int64_t j = 2; j <= k - 1; ++j) {
    const LogValue partners = log_binomial(k, j) * log_binomial(n - k, k - j);
    neighbourhood.push_back(partners);

    const std::int64_t shared = pairs(j);
    const std::int64_t own = p_k - shared;
    std::vector<LogValue> configurations;
    for (std::int64_t m = 0; m <= std::min(shared, i); ++m) {
      const LogValue rest = log_binomial(own, i - m);
      configurations.push_back(log_binomial(shared, m) * rest * rest);
    }
    const LogValue both = log_sum(configurations) * LogValue::from_log(-ln2_times(2 * p_k - shared));
    joint.push_back(partners * both);
  }
  neighbourhood.push_back(LogValue::one());

  const LogValue b1 = sets * p * p * log_sum(neighbourhood);
  const LogValue b2 = sets * log_sum(joint);
  return LogValue::from_double(2.0) * (b1 + b2);
}

double janson_lower_tail(double mu, double delta, double t) {
  if (mu < 0 || delta < 0) throw RangeError("janson_lower_tail: mu and delta must be >= 0");
  if (t < 0 || t > mu) throw RangeError("janson_lower_tail: need 0 <= t <= mu");
  if (t == 0) return 1.0;
  return std::exp(-t * t / (2.0 * (mu + delta)));
}

double p_minus_residual(double p) {
  const double q = 1.0 - p;
  return q + p * q * q - std::sqrt(q);
}

CriticalProbabilities critical_probabilities() {
  // The residual is positive just above 0, negative on (0.5, 1) and vanishes at p = 1.
  double lo = 1e-6;
  double hi = 0.9;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (p_minus_residual(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), (std::sqrt(5.0) - 1.0) / 2.0};
}

}  // namespace alphar
