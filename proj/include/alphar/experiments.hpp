#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "alphar/thresholds.hpp"

namespace alphar {

struct RunOptions {
  std::int64_t reps = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Runs fn(i) for i in [0, reps) on up to `threads` workers and returns the
/// results in index order, so the output does not depend on scheduling.
template <typename Fn>
auto run_replicates(std::int64_t reps, int threads, Fn fn) -> std::vector<decltype(fn(std::int64_t{}))> {
  using T = decltype(fn(std::int64_t{}));
  std::vector<T> out(static_cast<std::size_t>(std::max<std::int64_t>(reps, 0)));
  const int workers = static_cast<int>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(reps, 1)));
  if (workers == 1) {
    for (std::int64_t i = 0; i < reps; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t i = next++; i < reps && !failed; i = next++) {
        try {
          out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Sum over t of |p(t) - Poisson(lambda)(t)|, the unhalved total variation.
double tv_to_poisson(const std::map<std::int64_t, std::int64_t>& histogram, std::int64_t total, double lambda);

struct PoissonCheck {
  std::int64_t n = 0, k = 0, i = 0;
  RunOptions options;
  double expected = 0;               ///< E[Z_{k,i}]
  std::vector<std::int64_t> samples;  ///< Z_{k,i} per replicate
  std::map<std::int64_t, std::int64_t> histogram;
  double mean = 0;
  double variance = 0;
  double clt_radius = 0;       ///< sqrt(variance / reps)
  double tv_theoretical = 0;   ///< against Poisson(expected)
  double tv_empirical = 0;     ///< against Poisson(mean)
  double stein_chen = 0;       ///< analytic bound on the distance to Poisson(expected)
  bool degenerate = false;     ///< k = n: Z is a 0/1 indicator
};

/// Empirical law of Z_{k,i}(G(n,1/2)). Throws RangeError when E[Z_{k,i}] > 5.
PoissonCheck poisson_check(std::int64_t n, std::int64_t k, std::int64_t i, const RunOptions& options);

struct AlphaDistribution {
  std::int64_t n = 0, r = 0;
  RunOptions options;
  std::vector<std::int64_t> samples;  ///< alpha_{r+1} per replicate
  std::map<std::int64_t, std::int64_t> histogram;
  std::optional<Interval> interval;    ///< I_n, when n >= a_3
  std::optional<PredictedPmf> predicted;
  double coverage = 0;  ///< share of replicates inside I_n
  std::int64_t inexact = 0;
};

/// Requires n <= 30 and r in {2, 3}.
AlphaDistribution alpha_distribution(std::int64_t n, std::int64_t r, const RunOptions& options);

struct HittingReplicate {
  std::int64_t t1 = -1;  ///< first n with alpha_{r+1} >= level(n) r + j, or -1
  std::int64_t t2 = -1;  ///< first n with Z_{level(n)+1, mu_j} >= xi_j, or -1
  bool censored() const { return t1 < 0 || t2 < 0; }
};

struct HittingTime {
  std::int64_t r = 0, j = 0, n_max = 0;
  RunOptions options;
  std::vector<HittingReplicate> replicates;
  std::int64_t censored = 0;
  std::int64_t coincident = 0;   ///< uncensored with t1 = t2
  std::int64_t t1_before_t2 = 0;  ///< uncensored with t1 < t2
  std::map<std::int64_t, std::int64_t> difference;  ///< t1 - t2 over uncensored
  double coincidence_fraction = 0;
  double censoring_fraction = 0;
};

/// Grows G by vertex exposure from n = a_3 to n_max. Requires r = 2, n_max <= 30.
HittingTime hitting_time(std::int64_t r, std::int64_t j, std::int64_t n_max, const RunOptions& options);

struct WitnessReplicate {
  bool z_event = false;        ///< Z_{k+1,mu_j} >= xi_j
  bool built = false;          ///< build_structure found a structure
  bool build_limit = false;    ///< build_structure hit its node limit
  bool verified = false;       ///< verify_structure accepted the structure
  std::int64_t alpha = -1;     ///< exact alpha_{r+1} when n <= 30
};

struct WitnessRate {
  std::int64_t n = 0, r = 0, j = 0, k = 0, mu = 0, xi = 0;
  RunOptions options;
  double expected_z = 0;      ///< E[Z_{k+1,mu_j}]
  double predicted_tail = 0;  ///< P(Poisson(expected_z) >= xi_j)
  std::vector<WitnessReplicate> replicates;
  std::int64_t z_events = 0;
  std::int64_t successes = 0;
  std::int64_t limit_hits = 0;
  std::int64_t verify_failures = 0;
  bool alpha_checked = false;
  std::int64_t alpha_events = 0;          ///< alpha >= kr + j
  std::int64_t success_without_alpha = 0;  ///< built but alpha < kr + j
  double z_frequency = 0;
  double success_frequency = 0;
  double alpha_frequency = 0;
};

/// k defaults to level(n) when zero. Requires n <= 60.
WitnessRate witness_rate(std::int64_t n, std::int64_t r, std::int64_t j, const RunOptions& options,
                         std::int64_t k = 0);

}  // namespace alphar
