#pragma once

#include <cstdint>
#include <map>

#include "alphar/graph.hpp"

namespace alphar {

/// Fewest edge deletions leaving g r-partite: min over r-labelings of the
/// monochromatic edge count. Requires r^n <= 1e8.
std::int64_t distance_to_r_partite(const Graph& g, int r);

struct PartiteCensus {
  int m = 0;
  int r = 0;
  std::int64_t total = 0;        ///< graphs examined: 2^{C(m,2)}, or the sample count
  std::int64_t clique_free = 0;  ///< K_{r+1}-free among them
  std::map<std::int64_t, std::int64_t> histogram;  ///< t -> clique-free graphs at distance t
  bool sampled = false;
  std::uint64_t seed = 0;

  /// Share of clique-free graphs that are r-partite, histogram[0] / clique_free.
  double partite_fraction() const;
  /// 1.96-sigma binomial radius on partite_fraction (0 for an exhaustive sweep).
  double partite_fraction_radius() const;
};

/// Every labelled graph on [m] (m <= 7).
PartiteCensus partite_census(int m, int r);

/// `samples` uniform labelled graphs on [m] (m <= 12), edge coins as in sample().
PartiteCensus partite_census_sampled(int m, int r, std::int64_t samples, std::uint64_t seed);

}  // namespace alphar
