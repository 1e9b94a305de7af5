#pragma once

// Where in n each witness structure switches on: the level thresholds a_k,
// the per-breakpoint thresholds b_{k,i} and c_{k,i}, the predicted interval
// I_n and the Poisson-surrogate distribution of alpha_{r+1}(G(n,1/2)).
//
// Conventions:
//   * eps(k) = 1 / ln k.
//   * a_k uses eps(k). Thresholds on Z_{k+1,*} (b, c, mu(n)) use eps(k+1),
//     the epsilon attached to the set size k+1, which makes c_{k,s} = a_{k+1}
//     an identity.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alphar/log_value.hpp"

namespace alphar {

inline constexpr std::int64_t kMinLevel = 3;
inline constexpr std::int64_t kMaxLevel = 100;

/// 1 / ln k. Throws RangeError for k < 2.
double epsilon(std::int64_t k);

/// Smallest n >= lo with pred(n); pred must be monotone (false...true).
/// Brackets by doubling from `start`.
std::int64_t min_n_satisfying(const std::function<bool(std::int64_t)>& pred, std::int64_t lo,
                              std::int64_t start);

/// min{ n : E[Y_k] >= 1/eps(k) }.
std::int64_t a_k(std::int64_t k);

/// The unique k with a_k <= n < a_{k+1}. Independent of r. Throws RangeError for n < a_3.
std::int64_t level(std::int64_t n);

/// min{ i : E[Z_{k+1,i}] > 1/eps(k+1) }. Throws RangeError if no such i exists.
std::int64_t mu_of_n(std::int64_t n, std::int64_t k);

struct Breakpoint {
  std::int64_t j;   ///< j_i
  std::int64_t mu;  ///< mu_{j_i}
  std::int64_t b;   ///< min{ n : E[Z_{k+1,mu}] >= eps }
  std::int64_t c;   ///< min{ n : E[Z_{k+1,mu}] >= 1/eps }
};

struct ThresholdTable {
  std::int64_t r = 0;
  std::int64_t k = 0;
  double epsilon = 0;       ///< eps(k), used by a_k
  double epsilon_next = 0;  ///< eps(k+1), used by b, c and a_{k+1}
  std::int64_t a_k = 0;
  std::int64_t a_k1 = 0;
  std::vector<Breakpoint> breakpoints;

  /// Links of a_k <= b_1 <= c_1 <= ... <= b_s <= c_s that fail, as "b1<=c1" style labels.
  std::vector<std::string> chain_violations() const;
  bool chain_holds() const { return chain_violations().empty(); }
};

/// Throws RangeError for k outside [kMinLevel, kMaxLevel - 1]; throws Error if c_s != a_{k+1}.
ThresholdTable threshold_table(std::int64_t k, std::int64_t r);

struct Interval {
  std::int64_t k = 0;
  std::int64_t lo = 0;  ///< I_n = { lo, ..., hi }
  std::int64_t hi = 0;
  std::size_t phase = 0;  ///< 1-based breakpoint index i of the case that fired
  bool single() const { return lo == hi; }
  std::int64_t length() const { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The case analysis over a table: scanning i = 1..s, I_n = {kr + j_{i-1}} when
/// n < b_i, {kr + j_{i-1}, ..., kr + j_i} when b_i <= n < c_i, else move on.
/// With the chain intact this is exactly the two-case definition.
Interval interval_in_table(const ThresholdTable& table, std::int64_t n);

Interval interval_for(std::int64_t n, std::int64_t r);

struct PredictedPmf {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::vector<double> lambda;         ///< lambda[j-1] = E[Z_{k+1,mu_j}], j = 1..r
  std::vector<bool> outside_regime;   ///< lambda > n^{1/4}
  std::vector<double> raw_tail;       ///< P(X >= kr + j), j = 0..r, before repair
  std::vector<double> tail;           ///< after clipping and renormalising
  std::vector<double> pmf;            ///< P(X = kr + j), j = 0..r
  double mass_defect = 0;             ///< total negative mass clipped

  std::int64_t value(std::size_t j) const { return k * r + static_cast<std::int64_t>(j); }
};

PredictedPmf predicted_pmf(std::int64_t n, std::int64_t r);

}  // namespace alphar
