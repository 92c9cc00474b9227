#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "supergraphs/distance.hpp"
#include "supergraphs/error.hpp"

using namespace supergraphs;

TEST(Distance, SmallGraphs) {
  EXPECT_EQ(wiener_index(Graph::path(4)), 10u);
  EXPECT_EQ(wiener_index(Graph::complete(5)), 10u);
  EXPECT_EQ(wiener_index(Graph::cycle(6)), 27u);
  EXPECT_EQ(wiener_index(Graph::empty(1)), 0u);
  EXPECT_THROW(wiener_index(Graph::empty(2)), DisconnectedGraph);
  EXPECT_FALSE(is_connected(Graph::empty(2)));
  auto d = distance_matrix(Graph::empty(2));
  EXPECT_EQ(d(0, 1), DistanceMatrix::unreachable);
}

TEST(Distance, MatchesFloydWarshall) {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_connected_graph(rng, 1 + rng() % 14, 0.25);
    EXPECT_EQ(wiener_index(g), oracle::floyd_warshall_wiener(g));
  }
}

TEST(Distance, CompositionFormulaMatchesBfs) {
  std::mt19937 rng(29);
  for (int t = 0; t < 60; ++t) {
    Graph base = oracle::random_connected_graph(rng, 1 + rng() % 6, 0.4);
    std::vector<std::size_t> sizes;
    std::vector<FactorKind> kinds;
    for (std::size_t i = 0; i < base.size(); ++i) {
      sizes.push_back(1 + rng() % 4);
      // Edgeless factors on an isolated base vertex are disconnected.
      bool may_be_empty = base.size() > 1;
      kinds.push_back(may_be_empty && rng() % 2 ? FactorKind::empty : FactorKind::complete);
    }
    auto w = CompositionWitness::make(base, sizes, kinds);
    Graph composed = w.evaluate();
    EXPECT_EQ(wiener_via_composition(w), oracle::floyd_warshall_wiener(composed));
  }
}

TEST(Distance, SupergraphFormulaMatchesBfs) {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    Graph delta = oracle::random_connected_graph(rng, 1 + rng() % 7, 0.35);
    std::vector<std::size_t> sizes;
    std::vector<Graph> factors;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      sizes.push_back(1 + rng() % 5);
      factors.push_back(Graph::complete(sizes.back()));
    }
    EXPECT_EQ(wiener_supergraph_formula(delta, sizes), oracle::floyd_warshall_wiener(compose(delta, factors)));
  }
}

TEST(Distance, CompositionRejections) {
  auto w = CompositionWitness::make(Graph::empty(1), {3}, {FactorKind::empty});
  EXPECT_THROW(wiener_via_composition(w), InvalidArgument);
  auto d = CompositionWitness::make(Graph::empty(2), {1, 1}, {FactorKind::complete, FactorKind::complete});
  EXPECT_THROW(wiener_via_composition(d), DisconnectedGraph);
}
