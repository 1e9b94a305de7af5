#include "alphar/experiments.hpp"

#include <cmath>

#include "alphar/census.hpp"
#include "alphar/clique_structure.hpp"
#include "alphar/errors.hpp"
#include "alphar/graph.hpp"
#include "alphar/logmath.hpp"
#include "alphar/rng.hpp"
#include "alphar/solver.hpp"
#include "alphar/structure.hpp"

namespace alphar {
namespace {

std::map<std::int64_t, std::int64_t> histogram_of(const std::vector<std::int64_t>& values) {
  std::map<std::int64_t, std::int64_t> h;
  for (auto v : values) ++h[v];
  return h;
}

void check_reps(const RunOptions& options) {
  if (options.reps < 1) throw RangeError("reps must be positive");
  if (options.threads < 1) throw RangeError("threads must be positive");
}

}  // namespace

double tv_to_poisson(const std::map<std::int64_t, std::int64_t>& histogram, std::int64_t total, double lambda) {
  if (total <= 0) throw RangeError("tv_to_poisson needs a nonempty sample");
  const std::int64_t top = histogram.empty() ? 0 : histogram.rbegin()->first;
  double tv = 0;
  for (std::int64_t t = 0; t <= top; ++t) {
    const auto it = histogram.find(t);
    const double p = it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    tv += std::abs(p - poisson_pmf(lambda, t));
  }
  return tv + poisson_tail(lambda, top + 1);
}

PoissonCheck poisson_check(std::int64_t n, std::int64_t k, std::int64_t i, const RunOptions& options) {
  check_reps(options);
  if (n < 1 || n > kMaxVertices || k < 1 || k > n || i < 0) throw RangeError("poisson_check needs 1 <= k <= n <= 512, i >= 0");
  PoissonCheck out;
  out.n = n;
  out.k = k;
  out.i = i;
  out.options = options;
  out.expected = expected_defect_sets(n, k, i).to_double();
  if (out.expected > 5.0) throw RangeError("poisson_check needs E[Z_{k,i}] <= 5");
  out.degenerate = k == n;
  out.samples = run_replicates(options.reps, options.threads, [&](std::int64_t rep) {
    const Graph g = sample(static_cast<int>(n), replicate_seed(options.seed, static_cast<std::uint64_t>(rep)));
    return census(g, static_cast<int>(k), static_cast<int>(i)).count(static_cast<int>(i));
  });
  out.histogram = histogram_of(out.samples);
  double sum = 0;
  for (auto v : out.samples) sum += static_cast<double>(v);
  const double reps = static_cast<double>(options.reps);
  out.mean = sum / reps;
  double ss = 0;
  for (auto v : out.samples) ss += (static_cast<double>(v) - out.mean) * (static_cast<double>(v) - out.mean);
  out.variance = options.reps > 1 ? ss / (reps - 1) : 0.0;
  out.clt_radius = std::sqrt(out.variance / reps);
  out.tv_theoretical = tv_to_poisson(out.histogram, options.reps, out.expected);
  out.tv_empirical = tv_to_poisson(out.histogram, options.reps, out.mean);
  out.stein_chen = stein_chen_bound(n, k, i).to_double();
  return out;
}

AlphaDistribution alpha_distribution(std::int64_t n, std::int64_t r, const RunOptions& options) {
  check_reps(options);
  if (n < 1 || n > 30) throw RangeError("alpha_distribution needs 1 <= n <= 30");
  if (r != 2 && r != 3) throw RangeError("alpha_distribution needs r in {2, 3}");
  AlphaDistribution out;
  out.n = n;
  out.r = r;
  out.options = options;
  const auto results = run_replicates(options.reps, options.threads, [&](std::int64_t rep) {
    const Graph g = sample(static_cast<int>(n), replicate_seed(options.seed, static_cast<std::uint64_t>(rep)));
    return max_clique_free(g, static_cast<int>(r) + 1);
  });
  for (const auto& res : results) {
    out.samples.push_back(res.size);
    if (!res.exact()) ++out.inexact;
  }
  out.histogram = histogram_of(out.samples);
  if (n >= a_k(kMinLevel)) {
    out.interval = interval_for(n, r);
    out.predicted = predicted_pmf(n, r);
    std::int64_t inside = 0;
    for (auto v : out.samples) inside += (v >= out.interval->lo && v <= out.interval->hi) ? 1 : 0;
    out.coverage = static_cast<double>(inside) / static_cast<double>(options.reps);
  }
  return out;
}

HittingTime hitting_time(std::int64_t r, std::int64_t j, std::int64_t n_max, const RunOptions& options) {
  check_reps(options);
  if (r != 2) throw RangeError("hitting_time needs r = 2");
  if (j < 1 || j > r) throw RangeError("hitting_time needs 1 <= j <= r");
  const std::int64_t n_min = a_k(kMinLevel);
  if (n_max < n_min || n_max > 30) throw RangeError("hitting_time needs a_3 <= n_max <= 30");
  HittingTime out;
  out.r = r;
  out.j = j;
  out.n_max = n_max;
  out.options = options;
  const MuXi mx = mu_xi(r, j);
  out.replicates = run_replicates(options.reps, options.threads, [&](std::int64_t rep) {
    HittingReplicate h;
    VertexExposure stream(replicate_seed(options.seed, static_cast<std::uint64_t>(rep)));
    while (stream.n() < n_min - 1) stream.step();
    while (stream.n() < n_max && (h.t1 < 0 || h.t2 < 0)) {
      const Graph& g = stream.step();
      const std::int64_t n = g.n();
      const std::int64_t k = level(n);
      if (h.t1 < 0) {
        const SolveResult best = max_clique_free(g, static_cast<int>(r) + 1);
        if (best.size >= k * r + j) h.t1 = n;
      }
      if (h.t2 < 0 && k + 1 <= n) {
        const auto c = census(g, static_cast<int>(k + 1), static_cast<int>(mx.mu));
        if (c.count(static_cast<int>(mx.mu)) >= mx.xi) h.t2 = n;
      }
    }
    return h;
  });
  std::int64_t uncensored = 0;
  for (const auto& h : out.replicates) {
    if (h.censored()) {
      ++out.censored;
      continue;
    }
    ++uncensored;
    if (h.t1 == h.t2) ++out.coincident;
    if (h.t1 < h.t2) ++out.t1_before_t2;
    ++out.difference[h.t1 - h.t2];
  }
  out.coincidence_fraction = uncensored > 0 ? static_cast<double>(out.coincident) / static_cast<double>(uncensored) : 0.0;
  out.censoring_fraction = static_cast<double>(out.censored) / static_cast<double>(options.reps);
  return out;
}

WitnessRate witness_rate(std::int64_t n, std::int64_t r, std::int64_t j, const RunOptions& options, std::int64_t k) {
  check_reps(options);
  if (n < 1 || n > 60) throw RangeError("witness_rate needs 1 <= n <= 60");
  if (j < 1 || j > r) throw RangeError("witness_rate needs 1 <= j <= r");
  WitnessRate out;
  out.n = n;
  out.r = r;
  out.j = j;
  out.k = k > 0 ? k : level(n);
  if (out.k < 3 || out.k + 1 > n) throw RangeError("witness_rate needs 3 <= k < n");
  const MuXi mx = mu_xi(r, j);
  out.mu = mx.mu;
  out.xi = mx.xi;
  out.options = options;
  out.expected_z = expected_defect_sets(n, out.k + 1, mx.mu).to_double();
  out.predicted_tail = poisson_tail(out.expected_z, mx.xi);
  out.alpha_checked = n <= 30;
  const std::int64_t target = out.k * r + j;
  out.replicates = run_replicates(options.reps, options.threads, [&](std::int64_t rep) {
    WitnessReplicate w;
    const Graph g = sample(static_cast<int>(n), replicate_seed(options.seed, static_cast<std::uint64_t>(rep)));
    const auto c = census(g, static_cast<int>(out.k + 1), static_cast<int>(mx.mu));
    w.z_event = c.count(static_cast<int>(mx.mu)) >= mx.xi;
    const BuildResult built = build_structure(g, r, j, static_cast<int>(out.k));
    w.built = built.status == BuildStatus::kFound;
    w.build_limit = built.status == BuildStatus::kLimitExceeded;
    if (w.built) w.verified = verify_structure(g, *built.structure);
    if (out.alpha_checked) w.alpha = max_clique_free(g, static_cast<int>(r) + 1).size;
    return w;
  });
  for (const auto& w : out.replicates) {
    out.z_events += w.z_event ? 1 : 0;
    out.successes += w.built ? 1 : 0;
    out.limit_hits += w.build_limit ? 1 : 0;
    out.verify_failures += (w.built && !w.verified) ? 1 : 0;
    if (out.alpha_checked) {
      out.alpha_events += w.alpha >= target ? 1 : 0;
      out.success_without_alpha += (w.built && w.alpha < target) ? 1 : 0;
    }
  }
  const double reps = static_cast<double>(options.reps);
  out.z_frequency = static_cast<double>(out.z_events) / reps;
  out.success_frequency = static_cast<double>(out.successes) / reps;
  out.alpha_frequency = out.alpha_checked ? static_cast<double>(out.alpha_events) / reps : 0.0;
  return out;
}

}  // namespace alphar
