#include "alphar/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphar/clique_structure.hpp"
#include "alphar/errors.hpp"
#include "alphar/logmath.hpp"

namespace alphar {
namespace {

std::int64_t bracket_start(std::int64_t k) {
  return static_cast<std::int64_t>(std::ldexp(static_cast<double>(k), static_cast<int>((k + 3) / 2)));
}

// True iff E[Z_{size,i}](n) >= target, compared in log space.
bool expectation_at_least(std::int64_t n, std::int64_t size, std::int64_t i, double log_target) {
  const LogValue e = expected_defect_sets(n, size, i);
  return !e.is_zero() && e.log() >= log_target;
}

std::int64_t threshold(std::int64_t size, std::int64_t i, double log_target) {
  return min_n_satisfying([&](std::int64_t n) { return expectation_at_least(n, size, i, log_target); },
                          size, bracket_start(size));
}

const std::vector<std::int64_t>& level_starts() {
  static const std::vector<std::int64_t> starts = [] {
    std::vector<std::int64_t> a;
    for (std::int64_t k = kMinLevel; k <= kMaxLevel; ++k) a.push_back(a_k(k));
    return a;
  }();
  return starts;
}

}  // namespace

double epsilon(std::int64_t k) {
  if (k < 2) throw RangeError("epsilon(k) needs k >= 2");
  return 1.0 / std::log(static_cast<double>(k));
}

std::int64_t min_n_satisfying(const std::function<bool(std::int64_t)>& pred, std::int64_t lo,
                              std::int64_t start) {
  std::int64_t hi = std::max(lo, start);
  while (!pred(hi)) {
    if (hi > std::numeric_limits<std::int64_t>::max() / 2) throw RangeError("threshold search overflow");
    lo = hi + 1;
    hi *= 2;
  }
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t a_k(std::int64_t k) {
  if (k < kMinLevel || k > kMaxLevel) throw RangeError("a_k: k out of range");
  return threshold(k, 0, -std::log(epsilon(k)));
}

std::int64_t level(std::int64_t n) {
  const auto& starts = level_starts();
  if (n < starts.front()) throw RangeError("n = " + std::to_string(n) + " is below a_3 = " +
                                           std::to_string(starts.front()));
  if (n >= starts.back()) throw RangeError("n beyond the tabulated levels");
  const auto it = std::upper_bound(starts.begin(), starts.end(), n);
  return kMinLevel + static_cast<std::int64_t>(it - starts.begin()) - 1;
}

std::int64_t mu_of_n(std::int64_t n, std::int64_t k) {
  if (k < 2) throw RangeError("mu_of_n: k must be >= 2");
  const double log_target = -std::log(epsilon(k + 1));
  for (std::int64_t i = 0; i <= pairs(k + 1); ++i) {
    const LogValue e = expected_defect_sets(n, k + 1, i);
    if (!e.is_zero() && e.log() > log_target) return i;
  }
  throw RangeError("mu_of_n: no defect count reaches 1/eps at this n");
}

std::vector<std::string> ThresholdTable::chain_violations() const {
  std::vector<std::pair<std::string, std::int64_t>> chain{{"a_k", a_k}};
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    chain.emplace_back("b" + std::to_string(i + 1), breakpoints[i].b);
    chain.emplace_back("c" + std::to_string(i + 1), breakpoints[i].c);
  }
  std::vector<std::string> violations;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].second > chain[i + 1].second)
      violations.push_back(chain[i].first + "<=" + chain[i + 1].first);
  }
  if (!breakpoints.empty() && breakpoints.back().c != a_k1) violations.push_back("c_s=a_{k+1}");
  return violations;
}

ThresholdTable threshold_table(std::int64_t k, std::int64_t r) {
  if (k < kMinLevel || k >= kMaxLevel) throw RangeError("threshold_table: k out of range");
  const JProfile profile = j_set(r);
  ThresholdTable table;
  table.r = r;
  table.k = k;
  table.epsilon = epsilon(k);
  table.epsilon_next = epsilon(k + 1);
  table.a_k = a_k(k);
  table.a_k1 = a_k(k + 1);
  const double log_eps = std::log(table.epsilon_next);
  for (const std::int64_t j : profile.breakpoints) {
    const std::int64_t mu = profile.mu_at(j);
    table.breakpoints.push_back({j, mu, threshold(k + 1, mu, log_eps), threshold(k + 1, mu, -log_eps)});
  }
  if (table.breakpoints.back().c != table.a_k1) {
    throw Error("threshold_table: c_s != a_{k+1} (k=" + std::to_string(k) + ")");
  }
  return table;
}

Interval interval_in_table(const ThresholdTable& table, std::int64_t n) {
  const std::int64_t base = table.k * table.r;
  std::int64_t previous_j = 0;
  for (std::size_t i = 0; i < table.breakpoints.size(); ++i) {
    const Breakpoint& bp = table.breakpoints[i];
    if (n < bp.b) return {table.k, base + previous_j, base + previous_j, i + 1};
    if (n < bp.c) return {table.k, base + previous_j, base + bp.j, i + 1};
    previous_j = bp.j;
  }
  // Only reachable for n >= a_{k+1}, i.e. outside the table's level.
  throw RangeError("interval_in_table: n is not below a_{k+1}");
}

Interval interval_for(std::int64_t n, std::int64_t r) {
  return interval_in_table(threshold_table(level(n), r), n);
}

PredictedPmf predicted_pmf(std::int64_t n, std::int64_t r) {
  const JProfile profile = j_set(r);
  PredictedPmf out;
  out.n = n;
  out.r = r;
  out.k = level(n);
  const double regime = std::pow(static_cast<double>(n), 0.25);

  out.raw_tail.assign(static_cast<std::size_t>(r) + 1, 0.0);
  out.raw_tail[0] = 1.0;
  for (std::int64_t j = 1; j <= r; ++j) {
    const double lambda = expected_defect_sets(n, out.k + 1, profile.mu_at(j)).to_double();
    out.lambda.push_back(lambda);
    out.outside_regime.push_back(lambda > regime);
    out.raw_tail[static_cast<std::size_t>(j)] = poisson_tail(lambda, profile.xi_at(j));
  }

  // Difference into a pmf; clip negative masses and renormalise.
  out.pmf.assign(out.raw_tail.size(), 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < out.raw_tail.size(); ++j) {
    const double next = j + 1 < out.raw_tail.size() ? out.raw_tail[j + 1] : 0.0;
    const double mass = out.raw_tail[j] - next;
    if (mass < 0) {
      out.mass_defect += -mass;
    } else {
      out.pmf[j] = mass;
      total += mass;
    }
  }
  for (double& p : out.pmf) p /= total;
  out.tail.assign(out.pmf.size(), 0.0);
  double acc = 0.0;
  for (std::size_t j = out.pmf.size(); j-- > 0;) {
    acc += out.pmf[j];
    out.tail[j] = acc;
  }
  return out;
}

}  // namespace alphar
