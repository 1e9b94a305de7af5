#include "alphar/partite.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "alphar/errors.hpp"
#include "alphar/rng.hpp"

namespace alphar {
namespace {

constexpr int kMaxSmall = 16;

// Adjacency of a graph on at most 16 vertices as one mask per vertex.
using SmallAdj = std::array<std::uint32_t, kMaxSmall>;

class PartitionSearch {
 public:
  PartitionSearch(const SmallAdj& adj, int n, int r) : adj_(adj), n_(n), r_(r) {}

  std::int64_t run() {
    best_ = std::numeric_limits<std::int64_t>::max();
    parts_.fill(0);
    assign(0, 0, 0);
    return best_;
  }

 private:
  void assign(int v, int used, std::int64_t cost) {
    if (cost >= best_) return;
    if (v == n_) {
      best_ = cost;
      return;
    }
    // Labels are interchangeable, so a vertex may open at most one new part.
    const int limit = std::min(r_, used + 1);
    for (int c = 0; c < limit; ++c) {
      const std::int64_t added = std::popcount(adj_[static_cast<std::size_t>(v)] & parts_[static_cast<std::size_t>(c)]);
      parts_[static_cast<std::size_t>(c)] |= 1U << v;
      assign(v + 1, std::max(used, c + 1), cost + added);
      parts_[static_cast<std::size_t>(c)] &= ~(1U << v);
    }
  }

  const SmallAdj& adj_;
  int n_;
  int r_;
  std::array<std::uint32_t, kMaxSmall> parts_{};
  std::int64_t best_ = 0;
};

bool small_has_clique(const SmallAdj& adj, std::uint32_t set, int t) {
  if (t <= 0) return true;
  if (std::popcount(set) < t) return false;
  if (t == 1) return true;
  while (set) {
    const int v = std::countr_zero(set);
    set &= set - 1;
    if (small_has_clique(adj, set & adj[static_cast<std::size_t>(v)], t - 1)) return true;
  }
  return false;
}

void tally(PartiteCensus& out, const SmallAdj& adj) {
  ++out.total;
  const std::uint32_t all = (1U << out.m) - 1U;
  if (small_has_clique(adj, all, out.r + 1)) return;
  ++out.clique_free;
  ++out.histogram[PartitionSearch(adj, out.m, out.r).run()];
}

}  // namespace

std::int64_t distance_to_r_partite(const Graph& g, int r) {
  if (r < 1) throw RangeError("distance_to_r_partite needs r >= 1");
  if (std::pow(static_cast<double>(r), g.n()) > 1e8 || g.n() > kMaxSmall) {
    throw RangeError("distance_to_r_partite needs r^n <= 1e8");
  }
  SmallAdj adj{};
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.row(v).word(0));
  return PartitionSearch(adj, g.n(), r).run();
}

double PartiteCensus::partite_fraction() const {
  if (clique_free == 0) return 0.0;
  const auto it = histogram.find(0);
  return it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(clique_free);
}

double PartiteCensus::partite_fraction_radius() const {
  if (!sampled || clique_free == 0) return 0.0;
  const double p = partite_fraction();
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(clique_free));
}

PartiteCensus partite_census(int m, int r) {
  if (m < 1 || m > 7) throw RangeError("partite_census sweeps m <= 7");
  if (r < 1) throw RangeError("partite_census needs r >= 1");
  PartiteCensus out;
  out.m = m;
  out.r = r;
  const int bits = m * (m - 1) / 2;
  for (std::uint32_t code = 0; code < (1U << bits); ++code) {
    SmallAdj adj{};
    int b = 0;
    for (int v = 1; v < m; ++v) {
      for (int u = 0; u < v; ++u, ++b) {
        if ((code >> b) & 1U) {
          adj[static_cast<std::size_t>(u)] |= 1U << v;
          adj[static_cast<std::size_t>(v)] |= 1U << u;
        }
      }
    }
    tally(out, adj);
  }
  return out;
}

PartiteCensus partite_census_sampled(int m, int r, std::int64_t samples, std::uint64_t seed) {
  if (m < 1 || m > 12) throw RangeError("sampled partite census needs m <= 12");
  if (r < 1) throw RangeError("partite census needs r >= 1");
  if (samples < 1) throw RangeError("sample count must be positive");
  PartiteCensus out;
  out.m = m;
  out.r = r;
  out.sampled = true;
  out.seed = seed;
  for (std::int64_t s = 0; s < samples; ++s) {
    const std::uint64_t graph_seed = replicate_seed(seed, static_cast<std::uint64_t>(s));
    SmallAdj adj{};
    for (int v = 1; v < m; ++v) {
      for (int u = 0; u < v; ++u) {
        if (pair_coin(graph_seed, u, v)) {
          adj[static_cast<std::size_t>(u)] |= 1U << v;
          adj[static_cast<std::size_t>(v)] |= 1U << u;
        }
      }
    }
    tally(out, adj);
  }
  return out;
}

}  // namespace alphar
