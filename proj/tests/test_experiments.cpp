#include <cmath>

#include <gtest/gtest.h>

#include "alphar/errors.hpp"
#include "alphar/experiments.hpp"
#include "alphar/logmath.hpp"
#include "alphar/serialize.hpp"
#include "alphar/thresholds.hpp"
#include "oracles.hpp"

using namespace alphar;

TEST(RunReplicates, IndexOrderedAcrossThreadCounts) {
  const auto one = run_replicates(200, 1, [](std::int64_t i) { return i * i; });
  const auto four = run_replicates(200, 4, [](std::int64_t i) { return i * i; });
  EXPECT_EQ(one, four);
  for (std::int64_t i = 0; i < 200; ++i) EXPECT_EQ(one[static_cast<std::size_t>(i)], i * i);
}

TEST(RunReplicates, PropagatesExceptions) {
  auto boom = [](std::int64_t i) -> int {
    if (i == 37) throw RangeError("boom");
    return 0;
  };
  EXPECT_THROW(run_replicates(100, 3, boom), RangeError);
  EXPECT_THROW(run_replicates(100, 1, boom), RangeError);
}

TEST(TvToPoisson, HandComputedValues) {
  EXPECT_NEAR(tv_to_poisson({{0, 5}}, 5, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(tv_to_poisson({{0, 1}}, 1, 1.0), 2.0 * (1.0 - std::exp(-1.0)), 1e-12);
  EXPECT_NEAR(tv_to_poisson({{3, 1}}, 1, 1e-9), 2.0, 1e-6);
  EXPECT_THROW(tv_to_poisson({}, 0, 1.0), RangeError);
}

TEST(TvToPoisson, AtMostTwo) {
  for (double lambda : {0.1, 1.0, 3.0})
    for (std::int64_t t = 0; t < 6; ++t) {
      const double tv = tv_to_poisson({{t, 3}, {t + 2, 1}}, 4, lambda);
      EXPECT_GE(tv, 0.0);
      EXPECT_LE(tv, 2.0 + 1e-12);
    }
}

TEST(PoissonCheck, DeterministicAndThreadIndependent) {
  const PoissonCheck a = poisson_check(20, 6, 0, {300, 9, 1});
  const PoissonCheck b = poisson_check(20, 6, 0, {300, 9, 3});
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.histogram, b.histogram);
  const PoissonCheck c = poisson_check(20, 6, 0, {300, 10, 1});
  EXPECT_NE(a.samples, c.samples);
}

TEST(PoissonCheck, MeanMatchesExpectation) {
  const PoissonCheck p = poisson_check(12, 6, 1, {2000, 4, 1});
  EXPECT_NEAR(p.expected, oracle::pascal(12, 6) * 15.0 / 32768.0, 1e-9);
  EXPECT_LE(std::abs(p.mean - p.expected), 5.0 * p.clt_radius + 1e-12);
  EXPECT_GE(p.tv_theoretical, 0.0);
  EXPECT_LE(p.tv_theoretical, 2.0);
  EXPECT_FALSE(p.degenerate);
}

TEST(PoissonCheck, DegenerateAndPreconditions) {
  const PoissonCheck p = poisson_check(4, 4, 0, {500, 2, 1});
  EXPECT_TRUE(p.degenerate);
  for (const auto& [t, c] : p.histogram) EXPECT_LE(t, 1);
  EXPECT_THROW(poisson_check(40, 3, 0, {10, 0, 1}), RangeError);  // E far above 5
  EXPECT_THROW(poisson_check(10, 11, 0, {10, 0, 1}), RangeError);
  EXPECT_THROW(poisson_check(10, 5, 0, {0, 0, 1}), RangeError);
  EXPECT_THROW(poisson_check(10, 5, 0, {10, 0, 0}), RangeError);
}

TEST(AlphaDistribution, MatchesExhaustiveLawAtFiveVertices) {
  // Exact law of alpha_3 on G(5,1/2) from all 1024 graphs.
  std::map<std::int64_t, double> law;
  for (std::uint64_t code = 0; code < 1024; ++code) law[oracle::max_clique_free(oracle::graph_from_code(5, code), 3)] += 1.0 / 1024;
  const std::int64_t reps = 4000;
  const AlphaDistribution d = alpha_distribution(5, 2, {reps, 21, 2});
  EXPECT_EQ(d.inexact, 0);
  EXPECT_EQ(d.interval.has_value(), 5 >= a_k(3));
  for (const auto& [v, p] : law) {
    const double observed = d.histogram.count(v) ? static_cast<double>(d.histogram.at(v)) / reps : 0.0;
    EXPECT_NEAR(observed, p, 4.5 * std::sqrt(p * (1 - p) / reps) + 1e-9) << v;
  }
  for (const auto& [v, c] : d.histogram) EXPECT_TRUE(law.count(v)) << v;
}

TEST(AlphaDistribution, CoverageAndPrediction) {
  const AlphaDistribution d = alpha_distribution(16, 2, {100, 3, 1});
  ASSERT_TRUE(d.interval.has_value());
  ASSERT_TRUE(d.predicted.has_value());
  std::int64_t inside = 0;
  for (auto v : d.samples) inside += (v >= d.interval->lo && v <= d.interval->hi) ? 1 : 0;
  EXPECT_DOUBLE_EQ(d.coverage, inside / 100.0);
  EXPECT_THROW(alpha_distribution(31, 2, {10, 0, 1}), RangeError);
  EXPECT_THROW(alpha_distribution(10, 4, {10, 0, 1}), RangeError);
}

TEST(HittingTime, Invariants) {
  const HittingTime h = hitting_time(2, 1, 20, {40, 8, 2});
  ASSERT_EQ(h.replicates.size(), 40U);
  std::int64_t censored = 0, coincident = 0, before = 0;
  for (const auto& rep : h.replicates) {
    for (auto t : {rep.t1, rep.t2})
      if (t >= 0) {
        EXPECT_GE(t, a_k(3));
        EXPECT_LE(t, 20);
      }
    if (rep.censored()) {
      ++censored;
      continue;
    }
    coincident += rep.t1 == rep.t2 ? 1 : 0;
    before += rep.t1 < rep.t2 ? 1 : 0;
  }
  EXPECT_EQ(h.censored, censored);
  EXPECT_EQ(h.coincident, coincident);
  EXPECT_EQ(h.t1_before_t2, before);
  EXPECT_GE(h.coincidence_fraction, 0.0);
  EXPECT_LE(h.coincidence_fraction, 1.0);
  EXPECT_DOUBLE_EQ(h.censoring_fraction, censored / 40.0);
  const HittingTime again = hitting_time(2, 1, 20, {40, 8, 1});
  for (std::size_t i = 0; i < 40; ++i) {
    EXPECT_EQ(again.replicates[i].t1, h.replicates[i].t1);
    EXPECT_EQ(again.replicates[i].t2, h.replicates[i].t2);
  }
  EXPECT_THROW(hitting_time(3, 1, 20, {10, 0, 1}), RangeError);
  EXPECT_THROW(hitting_time(2, 1, 31, {10, 0, 1}), RangeError);
}

TEST(WitnessRate, SuccessImpliesEventAndAlpha) {
  const WitnessRate w = witness_rate(14, 2, 1, {150, 12, 2});
  EXPECT_EQ(w.k, level(14));
  EXPECT_EQ(w.mu, 1);
  EXPECT_EQ(w.xi, 1);
  EXPECT_TRUE(w.alpha_checked);
  EXPECT_EQ(w.verify_failures, 0);
  EXPECT_EQ(w.success_without_alpha, 0);
  for (const auto& rep : w.replicates) {
    if (rep.built) {
      EXPECT_TRUE(rep.z_event);
      EXPECT_TRUE(rep.verified);
      EXPECT_GE(rep.alpha, w.k * 2 + 1);
    }
  }
  EXPECT_LE(w.success_frequency, w.z_frequency);
  EXPECT_NEAR(w.expected_z, expected_defect_sets(14, w.k + 1, 1).to_double(), 1e-12);
  EXPECT_THROW(witness_rate(61, 2, 1, {10, 0, 1}), RangeError);
  EXPECT_THROW(witness_rate(14, 2, 3, {10, 0, 1}), RangeError);
}

TEST(Reports, SchemaAndTimingToggle) {
  const ExperimentReport rep = make_report(poisson_check(12, 6, 1, {50, 1, 1}));
  const Json with = rep.to_json(true);
  const Json without = rep.to_json(false);
  EXPECT_EQ(with.at("schema"), 1);
  EXPECT_EQ(with.at("experiment"), "poisson");
  EXPECT_TRUE(with.contains("timing"));
  EXPECT_FALSE(without.contains("timing"));
  EXPECT_EQ(without.at("replicates"), 50);
  EXPECT_FALSE(rep.rows_csv().empty());
}
