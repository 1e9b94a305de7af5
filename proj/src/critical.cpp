#include "alphar/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "alphar/errors.hpp"
#include "alphar/logmath.hpp"

namespace alphar {
namespace {

std::vector<int> smallest_last_order(const Graph& f) {
  std::vector<int> order;
  VertexSet left = f.vertices();
  while (!left.empty()) {
    int pick = -1;
    int pick_degree = 0;
    left.for_each([&](int v) {
      const int d = f.row(v).intersection_size(left);
      if (pick < 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    order.push_back(pick);
    left.erase(pick);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

bool colourable(const Graph& f, const std::vector<int>& order, std::vector<int>& colour, std::size_t at,
                int colours, int used) {
  if (at == order.size()) return true;
  const int v = order[at];
  // A fresh colour is interchangeable with any other fresh one: try only the first.
  const int limit = std::min(colours, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::size_t i = 0; i < at && !clash; ++i) {
      const int u = order[i];
      clash = colour[static_cast<std::size_t>(u)] == c && f.has_edge(u, v);
    }
    if (clash) continue;
    colour[static_cast<std::size_t>(v)] = c;
    if (colourable(f, order, colour, at + 1, colours, std::max(used, c + 1))) return true;
  }
  colour[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

int chromatic_number(const Graph& f) {
  if (f.n() > kMaxColoringVertices) throw RangeError("chromatic_number supports at most 12 vertices");
  if (f.n() == 0) return 0;
  if (f.edge_count() == 0) return 1;
  const auto order = smallest_last_order(f);
  std::vector<int> colour(static_cast<std::size_t>(f.n()), -1);
  for (int c = 2; c <= f.n(); ++c) {
    std::fill(colour.begin(), colour.end(), -1);
    if (colourable(f, order, colour, 0, c, 0)) return c;
  }
  return f.n();
}

bool is_r_critical(const Graph& f, int r) {
  if (chromatic_number(f) != r + 1) return false;
  for (const auto& [u, v] : f.edges()) {
    Graph h = f;
    h.remove_edge(u, v);
    if (chromatic_number(h) == r) return true;
  }
  return false;
}

LogValue log_Nbar(std::int64_t n, std::int64_t m, int r, double slack) {
  if (r < 2) throw RangeError("log_Nbar needs r >= 2");
  if (m < 0 || m > n) throw RangeError("log_Nbar needs 0 <= m <= n");
  const double md = static_cast<double>(m);
  double bits = (1.0 - 1.0 / r) * md * md / 2.0 + md * std::log2(static_cast<double>(r)) -
                static_cast<double>(pairs(m));
  if (m >= 1) bits += slack * std::log2(md);
  LogValue out = log_binomial(n, m);
  out *= LogValue::from_log(bits * std::numbers::ln2);
  return out;
}

std::int64_t m0(std::int64_t n, int r, double slack) {
  if (n < 100) throw RangeError("m0 needs n >= 100");
  if (r < 2) throw RangeError("m0 needs r >= 2");
  for (std::int64_t m = 1; m <= n; ++m) {
    if (log_Nbar(n, m, r, slack).log() <= 0.0) return m;
  }
  throw Error("m0: no m <= n with Nbar <= 1");
}

CriticalWindow concentration_window(std::int64_t n, int r, double slack) {
  CriticalWindow w;
  w.n = n;
  w.r = r;
  w.slack = slack;
  w.m0 = m0(n, r, slack);
  const double cutoff = -std::log(static_cast<double>(n)) / (2.0 * r);
  w.M = log_Nbar(n, w.m0, r, slack).log() <= cutoff ? w.m0 : w.m0 + 1;
  w.lo = w.M - 1 - r;
  w.hi = w.M - 1;
  return w;
}

std::int64_t turan_cancellation_residual(std::int64_t k, std::int64_t r) {
  if (k < 0 || r < 1 || k > 10'000 || r > 1'000) throw RangeError("turan_cancellation_residual: k or r out of range");
  const std::int64_t m = r * k;
  const std::int64_t rr = r;
  // 2r * (1-1/r) m^2 / 2 = (r-1) m^2;  2r * C(m,2) = r m (m-1);  2r * r C(k,2) = r^2 k (k-1).
  return (rr - 1) * m * m - rr * m * (m - 1) + rr * rr * k * (k - 1);
}

std::int64_t turan_number(std::int64_t m, std::int64_t r) {
  if (r < 1 || m < 0) throw RangeError("turan_number needs m >= 0, r >= 1");
  std::int64_t inside = 0;
  for (std::int64_t p = 0; p < r; ++p) {
    const std::int64_t part = m / r + (p < m % r ? 1 : 0);
    inside += pairs(part);
  }
  return pairs(m) - inside;
}

}  // namespace alphar
