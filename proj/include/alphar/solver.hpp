#pragma once

#include <cstdint>

#include "alphar/graph.hpp"

namespace alphar {

inline constexpr std::uint64_t kDefaultSolverNodeLimit = 200'000'000;

enum class SolveStatus { kExact, kLimitExceeded };

struct SolveResult {
  int size = 0;
  VertexSet witness;
  SolveStatus status = SolveStatus::kExact;
  std::uint64_t nodes = 0;

  bool exact() const { return status == SolveStatus::kExact; }
};

/// True iff g[s] contains a clique on t vertices.
bool has_clique(const Graph& g, const VertexSet& s, int t);

/// Largest vertex set inducing no K_q (q >= 2), by include/exclude branch and
/// bound. Candidates that would close a K_q are dropped eagerly, and the bound
/// covers the candidates by cliques, each contributing at most q-1. On hitting
/// the node limit the best set found so far is returned with kLimitExceeded.
SolveResult max_clique_free(const Graph& g, int q, std::uint64_t node_limit = kDefaultSolverNodeLimit);

/// True iff f is isomorphic to a (not necessarily induced) subgraph of h.
/// Requires |V(f)| <= 8.
bool contains_subgraph(const Graph& h, const Graph& f);

/// Largest vertex set whose induced subgraph has no copy of f. Requires
/// n <= 20 unless a node limit guards the call, and |V(f)| <= 6.
SolveResult max_F_free(const Graph& g, const Graph& f, std::uint64_t node_limit = kDefaultSolverNodeLimit);

}  // namespace alphar
