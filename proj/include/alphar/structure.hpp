#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alphar/graph.hpp"

namespace alphar {

struct PlusPart {
  VertexSet set;              // k+1 vertices
  std::vector<Edge> defects;  // the edges inside set
};

struct CoverPart {
  VertexSet set;  // k independent vertices
  Edge defect;    // the plus-part edge this set covers
};

/// A K_{r+1}-free witness on kr+j vertices: xi_j plus-parts with mu_j defects,
/// j - xi_j with mu_j + 1, and one covering independent k-set per defect.
struct DefectStructure {
  std::int64_t r = 0;
  std::int64_t j = 0;
  int k = 0;
  std::vector<PlusPart> plus_parts;
  std::vector<CoverPart> cover_parts;

  VertexSet vertex_union() const;
};

enum class BuildStatus { kFound, kNotFound, kLimitExceeded };

struct BuildResult {
  BuildStatus status = BuildStatus::kNotFound;
  std::optional<DefectStructure> structure;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBuildNodeLimit = 10'000'000;

/// Chooses disjoint plus-parts in bit-pattern order, then a fresh cover for each
/// defect, backtracking over covers and then parts until the node limit.
BuildResult build_structure(const Graph& g, std::int64_t r, std::int64_t j, int k,
                            std::uint64_t node_limit = kDefaultBuildNodeLimit);

/// Checks every structural invariant and that the union spans no K_{r+1}; the
/// clique check runs through max_clique_free when the union has at most 30
/// vertices and through a direct clique search otherwise.
bool verify_structure(const Graph& g, const DefectStructure& s);

}  // namespace alphar
