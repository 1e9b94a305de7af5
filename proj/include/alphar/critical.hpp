#pragma once

#include <cstdint>

#include "alphar/graph.hpp"
#include "alphar/log_value.hpp"

namespace alphar {

inline constexpr int kMaxColoringVertices = 12;

/// Exact chromatic number by backtracking colouring in smallest-last order.
/// Throws RangeError above 12 vertices.
int chromatic_number(const Graph& f);

/// chi(f) = r+1 and deleting some edge leaves chi = r.
bool is_r_critical(const Graph& f, int r);

/// C(n,m) * 2^{(1-1/r)m^2/2 + m log2 r + slack*log2 m - C(m,2)}. The slack term
/// widens or narrows the count of F-free graphs by a log2 m exponent.
LogValue log_Nbar(std::int64_t n, std::int64_t m, int r, double slack = 0.0);

/// min{ m >= 1 : Nbar(n,m,r) <= 1 }. Requires n >= 100, r >= 2.
std::int64_t m0(std::int64_t n, int r, double slack = 0.0);

struct CriticalWindow {
  std::int64_t n = 0;
  int r = 0;
  std::int64_t m0 = 0;
  std::int64_t M = 0;
  std::int64_t lo = 0;  ///< M - 1 - r
  std::int64_t hi = 0;  ///< M - 1
  double slack = 0.0;

  std::int64_t width() const { return hi - lo + 1; }
};

/// M = m0 if Nbar(n, m0) <= n^{-1/(2r)}, otherwise m0 + 1; window [M-1-r, M-1].
CriticalWindow concentration_window(std::int64_t n, int r, double slack = 0.0);

/// 2r * [ (1-1/r)m^2/2 - C(m,2) + r C(k,2) ] at m = rk, in exact integers.
/// Identically zero. Requires k <= 1e4, r <= 1e3.
std::int64_t turan_cancellation_residual(std::int64_t k, std::int64_t r);

/// Edges of the balanced complete r-partite graph on m vertices.
std::int64_t turan_number(std::int64_t m, std::int64_t r);

}  // namespace alphar
