#pragma once

// Binomial-scale expectations for G(n,1/2), Poisson laws and the analytic
// bounds (Stein-Chen, Janson) used to reason about them.

#include <cstdint>
#include <optional>

#include "alphar/log_value.hpp"

namespace alphar {

/// C(n, k) exactly, when it fits in 64 bits. Used for n <= 64.
std::optional<std::uint64_t> exact_binomial(std::int64_t n, std::int64_t k);

/// C(n, k); zero for k < 0 or k > n.
LogValue log_binomial(std::int64_t n, std::int64_t k);

/// Number of vertex pairs in a k-set, C(k,2).
constexpr std::int64_t pairs(std::int64_t k) { return k * (k - 1) / 2; }

/// E[Y_k] = C(n,k) 2^{-C(k,2)}: expected number of independent k-sets in G(n,1/2).
LogValue expected_independent_sets(std::int64_t n, std::int64_t k);

/// E[Z_{k,i}] = C(n,k) C(C(k,2),i) 2^{-C(k,2)}: expected number of k-sets spanning exactly i edges.
LogValue expected_defect_sets(std::int64_t n, std::int64_t k, std::int64_t i);

/// E[Z_{k+1,i+1}] / E[Z_{k+1,i}] = (C(k+1,2) - i) / (i + 1).
/// Throws RangeError when i >= C(k+1,2).
LogValue defect_ratio(std::int64_t k, std::int64_t i);

LogValue log_poisson_pmf(double lambda, std::int64_t t);
double poisson_pmf(double lambda, std::int64_t t);
/// P(Poiss(lambda) >= t).
double poisson_tail(double lambda, std::int64_t t);

/// C(n,k) sum_{j=1}^{k-1} C(k,j) C(n-k,k-j) 2^{-2C(k,2)+C(j,2)}: expected number of
/// ordered pairs of distinct independent k-sets that share at least one vertex.
LogValue overlap_sum(std::int64_t n, std::int64_t k);

/// The Stein-Chen bound 2(b1 + b2) on sum_t |P(Z_{k,i}=t) - Poiss(E Z_{k,i})(t)|.
/// The neighbourhood of a k-set is itself plus every k-set sharing >= 2 vertices with it.
/// b2 is evaluated exactly: for overlap j the shared C(j,2) pairs are convolved over the
/// number of edges they carry.
LogValue stein_chen_bound(std::int64_t n, std::int64_t k, std::int64_t i);

/// Janson / Riordan-Warnke lower-tail bound exp(-t^2 / (2(mu + delta))), 0 <= t <= mu.
double janson_lower_tail(double mu, double delta, double t);

struct CriticalProbabilities {
  double p_minus;
  double p_plus;
};

/// p_plus = (sqrt 5 - 1)/2; p_minus is the root in (0,1) of
/// (1-p) + p(1-p)^2 = (1-p)^{1/2}, by bisection.
CriticalProbabilities critical_probabilities();

/// Residual (lhs - rhs) of the p_minus equation.
double p_minus_residual(double p);

}  // namespace alphar
