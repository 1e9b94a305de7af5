#include <random>

#include <gtest/gtest.h>

#include "alphar/census.hpp"
#include "alphar/errors.hpp"
#include "alphar/rng.hpp"
#include "alphar/solver.hpp"
#include "oracles.hpp"

using namespace alphar;

TEST(MaxCliqueFree, SmallGraphs) {
  EXPECT_EQ(max_clique_free(Graph::complete(4), 3).size, 2);
  EXPECT_EQ(max_clique_free(Graph::cycle(5), 3).size, 5);
  EXPECT_EQ(max_clique_free(Graph::complete(7), 4).size, 3);
  EXPECT_EQ(max_clique_free(Graph(9), 2).size, 9);
  EXPECT_EQ(max_clique_free(Graph::petersen(), 2).size, 4);
  EXPECT_EQ(max_clique_free(Graph(0), 3).size, 0);
  EXPECT_THROW(max_clique_free(Graph(3), 1), RangeError);
}

TEST(MaxCliqueFree, WitnessIsCliqueFree) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const Graph g = sample(25, rng());
    for (int q : {2, 3, 4}) {
      const SolveResult r = max_clique_free(g, q);
      EXPECT_TRUE(r.exact());
      EXPECT_EQ(r.witness.size(), r.size);
      EXPECT_FALSE(has_clique(g, r.witness, q));
    }
  }
}

TEST(MaxCliqueFree, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const int q = 3 + static_cast<int>(rng() % 2);
    const Graph g = sample(n, rng());
    EXPECT_EQ(max_clique_free(g, q).size, oracle::max_clique_free(g, q)) << n << " " << q;
  }
}

TEST(MaxCliqueFree, MonotoneInQAndEdges) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Graph g = sample(18, rng());
    int previous = 0;
    for (int q = 2; q <= 6; ++q) {
      const int s = max_clique_free(g, q).size;
      EXPECT_GE(s, previous);
      previous = s;
    }
    const int before = max_clique_free(g, 3).size;
    for (int u = 0; u < 18; ++u)
      for (int v = u + 1; v < 18; ++v)
        if (!g.has_edge(u, v) && (rng() % 5 == 0)) g.add_edge(u, v);
    EXPECT_LE(max_clique_free(g, 3).size, before);
  }
}

TEST(MaxCliqueFree, IndependenceNumberAgreesWithCensus) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Graph g = sample(20, rng());
    const int alpha = max_clique_free(g, 2).size;
    EXPECT_GT(census(g, alpha, 0).count(0), 0);
    if (alpha < 20) {
      EXPECT_EQ(census(g, alpha + 1, 0).count(0), 0);
    }
  }
}

TEST(MaxCliqueFree, NodeLimitMarksResultInexact) {
  const Graph g = sample(30, 5);
  const SolveResult r = max_clique_free(g, 3, 10);
  EXPECT_EQ(r.status, SolveStatus::kLimitExceeded);
  EXPECT_GT(r.size, 0);
  EXPECT_FALSE(has_clique(g, r.witness, 3));
}

TEST(ContainsSubgraph, KnownCases) {
  EXPECT_FALSE(contains_subgraph(Graph::cycle(5), Graph::complete(3)));
  EXPECT_TRUE(contains_subgraph(Graph::petersen(), Graph::cycle(5)));
  EXPECT_FALSE(contains_subgraph(Graph::petersen(), Graph::cycle(4)));
  EXPECT_TRUE(contains_subgraph(Graph::cycle(6), Graph(6)));
  EXPECT_FALSE(contains_subgraph(Graph::cycle(5), Graph(6)));
  EXPECT_THROW(contains_subgraph(Graph(10), Graph(9)), RangeError);
}

TEST(ContainsSubgraph, MatchesExhaustiveEmbedding) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Graph h = sample(4 + static_cast<int>(rng() % 5), rng());
    const Graph f = sample(2 + static_cast<int>(rng() % 4), rng());
    EXPECT_EQ(contains_subgraph(h, f), oracle::contains_subgraph(h, f));
  }
}

TEST(MaxFFree, KnownCases) {
  EXPECT_EQ(max_F_free(Graph::cycle(5), Graph::cycle(5)).size, 4);
  for (int n = 2; n < 10; ++n) EXPECT_EQ(max_F_free(sample(n, 7), Graph(2)).size, 1);
  EXPECT_EQ(max_F_free(Graph::petersen(), Graph::complete(3)).size, 10);
}

TEST(MaxFFree, TriangleCaseEqualsCliqueSolver) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const Graph g = sample(1 + static_cast<int>(rng() % 14), rng());
    EXPECT_EQ(max_F_free(g, Graph::complete(3)).size, max_clique_free(g, 3).size);
  }
}

TEST(MaxFFree, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(7);
  const std::vector<Graph> patterns{Graph::cycle(4), Graph::cycle(5), Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})};
  for (int t = 0; t < 15; ++t) {
    const Graph g = sample(6 + static_cast<int>(rng() % 5), rng());
    for (const auto& f : patterns) {
      const SolveResult r = max_F_free(g, f);
      EXPECT_EQ(r.size, oracle::max_F_free(g, f));
      EXPECT_FALSE(contains_subgraph(g.induced(r.witness), f));
    }
  }
}
