#include <cmath>

#include <gtest/gtest.h>

#include "alphar/clique_structure.hpp"
#include "alphar/errors.hpp"
#include "alphar/logmath.hpp"
#include "alphar/thresholds.hpp"

using namespace alphar;

namespace {

double log_ey(std::int64_t n, std::int64_t k) { return expected_independent_sets(n, k).log(); }
double log_ez(std::int64_t n, std::int64_t k, std::int64_t i) { return expected_defect_sets(n, k, i).log(); }

}  // namespace

TEST(Epsilon, ValuesAndMonotonicity) {
  EXPECT_NEAR(epsilon(8), 1.0 / std::log(8.0), 1e-15);
  EXPECT_NEAR(epsilon(8), 0.4809, 1e-4);
  for (int k = 2; k < 200; ++k) EXPECT_LT(epsilon(k + 1), epsilon(k));
  EXPECT_LT(epsilon(1'000'000), 0.08);
  EXPECT_THROW(epsilon(1), RangeError);
}

TEST(Ak, SmallValues) {
  EXPECT_EQ(a_k(3), 5);
  EXPECT_EQ(a_k(4), 9);
  EXPECT_EQ(a_k(5), 14);
  EXPECT_EQ(a_k(6), 22);
  EXPECT_EQ(a_k(7), 33);
}

TEST(Ak, MinimalityCertificates) {
  for (std::int64_t k = 3; k <= 60; ++k) {
    const std::int64_t a = a_k(k);
    const double target = -std::log(epsilon(k));
    EXPECT_GE(log_ey(a, k), target) << k;
    EXPECT_LT(log_ey(a - 1, k), target) << k;
  }
}

TEST(Ak, GrowthAgainstClosedForm) {
  for (std::int64_t k = 5; k <= 60; ++k) {
    const double closed = (static_cast<double>(k) / std::exp(1.0)) * std::pow(2.0, (k - 1) / 2.0);
    EXPECT_GT(static_cast<double>(a_k(k)), closed) << k;
    if (k >= 44) {
      EXPECT_LE(static_cast<double>(a_k(k)) / closed, 1.1) << k;
    }
    if (k >= 40) {
      const double ratio = static_cast<double>(a_k(k + 1)) / static_cast<double>(a_k(k));
      EXPECT_NEAR(ratio / std::sqrt(2.0), 1.0, 0.05) << k;
    }
  }
}

TEST(Level, BoundariesAndSteps) {
  EXPECT_THROW(level(4), RangeError);
  for (std::int64_t k = 3; k < 60; ++k) {
    EXPECT_EQ(level(a_k(k)), k);
    EXPECT_EQ(level(a_k(k + 1) - 1), k);
  }
  std::int64_t previous = level(5);
  for (std::int64_t n = 5; n < 5000; ++n) {
    const std::int64_t k = level(n);
    EXPECT_TRUE(k == previous || k == previous + 1) << n;
    previous = k;
  }
}

TEST(MuOfN, EndpointsAndMonotonicity) {
  for (std::int64_t k = 5; k <= 40; ++k) {
    EXPECT_EQ(mu_of_n(a_k(k + 1), k), 0) << k;
    const std::int64_t lo = a_k(k);
    const std::int64_t hi = a_k(k + 1);
    const std::int64_t step = std::max<std::int64_t>(1, (hi - lo) / 300);
    std::int64_t previous = mu_of_n(lo, k);
    for (std::int64_t n = lo; n < hi; n += step) {
      const std::int64_t m = mu_of_n(n, k);
      EXPECT_LE(m, previous) << k << " " << n;
      previous = m;
    }
  }
  for (std::int64_t k = 20; k <= 60; ++k) EXPECT_GE(mu_of_n(a_k(k), k), 2) << k;
}

TEST(ThresholdTable, MinimalityCertificates) {
  for (std::int64_t r : {1, 2, 3, 5, 11}) {
    for (std::int64_t k = 10; k <= 40; k += 3) {
      const ThresholdTable t = threshold_table(k, r);
      const double lo = std::log(t.epsilon_next);
      for (const auto& b : t.breakpoints) {
        EXPECT_GE(log_ez(b.b, k + 1, b.mu), lo);
        EXPECT_LT(log_ez(b.b - 1, k + 1, b.mu), lo);
        EXPECT_GE(log_ez(b.c, k + 1, b.mu), -lo);
        EXPECT_LT(log_ez(b.c - 1, k + 1, b.mu), -lo);
      }
    }
  }
}

TEST(ThresholdTable, LastThresholdIsNextLevel) {
  for (std::int64_t r : {2, 3, 5, 11}) {
    for (std::int64_t k = 10; k <= 60; ++k) {
      const ThresholdTable t = threshold_table(k, r);
      EXPECT_EQ(t.breakpoints.back().c, a_k(k + 1)) << r << " " << k;
      EXPECT_EQ(t.a_k1, a_k(k + 1));
    }
  }
}

TEST(ThresholdTable, ChainAfterTheFirstLink) {
  // Every link except a_k <= b_{k,1} holds on the whole sweep; that first link
  // fails at small k because E[Z_{k+1,r-1}] is still large at n = a_k.
  for (std::int64_t r : {2, 3, 5, 11}) {
    for (std::int64_t k = 10; k <= 60; ++k) {
      for (const auto& v : threshold_table(k, r).chain_violations()) EXPECT_EQ(v, "a_k<=b1") << r << " " << k;
    }
  }
  for (std::int64_t k = 18; k <= 60; ++k) EXPECT_TRUE(threshold_table(k, 2).chain_holds()) << k;
}

TEST(ThresholdTable, SingleBreakpointWhenRIsOne) {
  const ThresholdTable t = threshold_table(12, 1);
  ASSERT_EQ(t.breakpoints.size(), 1U);
  EXPECT_EQ(t.breakpoints[0].j, 1);
  EXPECT_EQ(t.breakpoints[0].mu, 0);
  EXPECT_GE(log_ey(t.breakpoints[0].b, 13), std::log(t.epsilon_next));
  EXPECT_LT(log_ey(t.breakpoints[0].b - 1, 13), std::log(t.epsilon_next));
}

TEST(IntervalFor, ElevenCaseTable) {
  const std::int64_t k = 30;
  const ThresholdTable t = threshold_table(k, 11);
  ASSERT_EQ(t.breakpoints.size(), 5U);
  const auto& third = t.breakpoints[2];
  const auto& fourth = t.breakpoints[3];
  ASSERT_LT(third.c, fourth.b);
  for (std::int64_t n : {third.c, (third.c + fourth.b) / 2, fourth.b - 1}) {
    const Interval iv = interval_for(n, 11);
    EXPECT_EQ(iv.lo, 11 * k + 3);
    EXPECT_EQ(iv.hi, 11 * k + 3);
  }
  for (std::int64_t n : {fourth.b, fourth.c - 1}) {
    const Interval iv = interval_for(n, 11);
    EXPECT_EQ(iv.lo, 11 * k + 3);
    EXPECT_EQ(iv.hi, 11 * k + 5);
  }
}

TEST(IntervalFor, FirstPhaseIsKr) {
  for (std::int64_t k = 18; k <= 50; ++k) {
    const Interval iv = interval_for(a_k(k), 2);
    EXPECT_EQ(iv.lo, 2 * k);
    EXPECT_EQ(iv.hi, 2 * k);
  }
}

TEST(IntervalFor, EndpointsMoveForward) {
  for (std::int64_t r : {2, 3, 11}) {
    for (std::int64_t k = 30; k <= 34; ++k) {
      const ThresholdTable t = threshold_table(k, r);
      std::vector<std::int64_t> probes{t.a_k};
      for (const auto& b : t.breakpoints) {
        probes.push_back(b.b - 1);
        probes.push_back(b.b);
        probes.push_back(b.c - 1);
        probes.push_back(b.c);
      }
      std::sort(probes.begin(), probes.end());
      Interval previous = interval_for(probes.front(), r);
      for (auto n : probes) {
        if (n < t.a_k) continue;
        const Interval iv = interval_for(n, r);
        if (iv.k == previous.k) {
          EXPECT_GE(iv.lo, previous.lo);
          EXPECT_GE(iv.hi, previous.hi);
          EXPECT_LE(iv.lo, previous.hi) << "consecutive intervals share a value";
        }
        previous = iv;
      }
    }
  }
}

TEST(PredictedPmf, NormalisedAndMonotone) {
  for (std::int64_t r : {2, 3, 5, 11}) {
    for (std::int64_t n : {100LL, 5000LL, 123456LL, 98765432LL}) {
      const PredictedPmf p = predicted_pmf(n, r);
      double total = 0;
      for (double x : p.pmf) {
        EXPECT_GE(x, 0.0);
        total += x;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      for (std::size_t j = 0; j + 1 < p.tail.size(); ++j) EXPECT_GE(p.tail[j], p.tail[j + 1] - 1e-15);
      EXPECT_EQ(p.value(0), p.k * r);
    }
  }
}

TEST(PredictedPmf, TwoCliqueReductionUsesGeneralMachinery) {
  const JProfile p = j_set(2);
  EXPECT_EQ(p.mu_at(1), 1);
  EXPECT_EQ(p.xi_at(1), 1);
  EXPECT_EQ(p.mu_at(2), 0);
  EXPECT_EQ(p.xi_at(2), 2);
  for (std::int64_t n : {1000LL, 40000LL, 2'000'000LL}) {
    const PredictedPmf pmf = predicted_pmf(n, 2);
    const std::int64_t k = pmf.k;
    EXPECT_DOUBLE_EQ(pmf.raw_tail[1], poisson_tail(expected_defect_sets(n, k + 1, 1).to_double(), 1));
    EXPECT_DOUBLE_EQ(pmf.raw_tail[2], poisson_tail(expected_independent_sets(n, k + 1).to_double(), 2));
  }
}

TEST(PredictedPmf, ModeShapeAtUnitMean) {
  // Where lambda = E[Y_{k+1}] crosses 1 inside the last phase, the top value
  // kr + j_s = kr + 2 carries at least e^{-1} / xi_2! = e^{-1} / 2.
  const std::int64_t k = 25;
  const ThresholdTable t = threshold_table(k, 2);
  std::int64_t lo = t.breakpoints[1].b;
  std::int64_t hi = t.breakpoints[1].c;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (expected_independent_sets(mid, k + 1).to_double() >= 1.0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const PredictedPmf p = predicted_pmf(lo, 2);
  EXPECT_NEAR(p.lambda[1], 1.0, 1e-3);
  EXPECT_GE(p.pmf[2], std::exp(-1.0) / 2.0);
}
