#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "alphar/graph.hpp"

namespace alphar {

inline constexpr std::uint64_t kDefaultNodeLimit = 1'000'000'000;
inline constexpr std::size_t kDefaultWitnessCap = 100'000;

struct CensusOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  bool collect_witnesses = false;
  std::size_t witness_cap = kDefaultWitnessCap;
};

struct CensusWitness {
  VertexSet set;
  std::vector<Edge> edges;
};

struct CensusResult {
  int k = 0;
  int budget = 0;
  std::map<int, std::int64_t> counts;  // i -> Z_{k,i}, every i in [0, budget]
  std::vector<CensusWitness> witnesses;
  bool truncated = false;  // witnesses hit the cap; counts stay exact
  std::uint64_t nodes = 0;

  std::int64_t count(int i) const;
  std::int64_t total() const;
};

/// Visits every k-subset of `allowed` spanning at most `budget` edges, passing
/// the set and its edge count. Vertices are tried in ascending-degree order and
/// partial sets are dropped as soon as they exceed the budget. Returns the
/// number of partial sets visited; throws LimitExceeded past node_limit.
std::uint64_t for_each_sparse_set(const Graph& g, int k, int budget, const VertexSet& allowed,
                                  const std::function<void(const VertexSet&, int)>& visit,
                                  std::uint64_t node_limit = kDefaultNodeLimit);

/// Z_{k,i} for i = 0..budget. Requires 1 <= k <= n and budget >= 0.
CensusResult census(const Graph& g, int k, int budget, const CensusOptions& options = {});

/// All independent k-sets, in increasing bit-pattern order.
std::vector<VertexSet> independent_sets(const Graph& g, int k, std::uint64_t node_limit = kDefaultNodeLimit);

/// Independent k-sets avoiding e's ends that cover e, in increasing bit-pattern order.
std::vector<VertexSet> cover_family(const Graph& g, Edge e, int k, std::uint64_t node_limit = kDefaultNodeLimit);

/// At most floor(|s|^{3/4}) edges inside s.
bool is_light(const Graph& g, const VertexSet& s);

/// At most floor(k^{2/3}) vertices of a are adjacent to both ends of e;
/// k defaults to |a| when negative.
bool weakly_covers(const Graph& g, const VertexSet& a, Edge e, int k = -1);

}  // namespace alphar
