#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "supergraphs/comparability.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/supergraph.hpp"

using namespace supergraphs;

namespace {

Graph relabel_randomly(std::mt19937& rng, const Graph& g) {
  std::vector<Vertex> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.size(), edges);
}

}  // namespace

TEST(Isomorphism, Reflexive) {
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(rng, rng() % 12, 0.4);
    auto m = find_isomorphism(g, g);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_isomorphism(g, g, *m));
  }
}

TEST(Isomorphism, FindsRelabelledCopiesAndSymmetric) {
  std::mt19937 rng(2);
  for (int t = 0; t < 60; ++t) {
    Graph a = oracle::random_graph(rng, 1 + rng() % 20, 0.3);
    Graph b = relabel_randomly(rng, a);
    auto ab = find_isomorphism(a, b);
    auto ba = find_isomorphism(b, a);
    ASSERT_TRUE(ab && ba);
    EXPECT_TRUE(is_isomorphism(a, b, *ab));
    EXPECT_TRUE(is_isomorphism(b, a, *ba));
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 7;
    Graph a = oracle::random_graph(rng, n, 0.5);
    Graph b = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(is_isomorphic(a, b), oracle::brute_isomorphic(a, b));
    EXPECT_EQ(is_isomorphic(a, b), is_isomorphic(b, a));
  }
}

TEST(Isomorphism, RegularNonIsomorphic) {
  // C6 versus two triangles: same degree sequence, different graphs.
  Graph c6 = Graph::cycle(6);
  Graph tt = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(is_isomorphic(c6, tt));
  EXPECT_FALSE(is_isomorphic(Graph::path(3), Graph::path(4)));
  EXPECT_FALSE(is_isomorphism(c6, c6, {0, 0, 1, 2, 3, 4}));
}

TEST(Isomorphism, Cap) {
  EXPECT_THROW(find_isomorphism(Graph::empty(kIsomorphismCap + 1), Graph::empty(kIsomorphismCap + 1)),
               CapExceeded);
}

TEST(Comparability, AgreesWithBruteForce) {
  std::mt19937 rng(4);
  int yes = 0, no = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 7, 0.5);
    if (g.edge_count() > 14) continue;
    bool expected = oracle::brute_comparability(g);
    EXPECT_EQ(is_comparability(g), expected);
    (expected ? yes : no)++;
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(Comparability, KnownGraphs) {
  EXPECT_FALSE(is_comparability(Graph::cycle(5)));
  EXPECT_TRUE(is_comparability(Graph::cycle(6)));
  EXPECT_TRUE(is_comparability(Graph::complete(6)));
  EXPECT_TRUE(is_comparability(Graph::empty(3)));
  EXPECT_THROW(is_comparability(Graph::empty(kComparabilityCap + 1)), CapExceeded);
}

TEST(Comparability, PowerGraphsAreComparability) {
  for (const auto& spec : default_catalog(true)) {
    FiniteGroup g = make_group(spec);
    EXPECT_TRUE(is_comparability(build_base_graph(g, AdjacencyKind::power))) << spec.label();
  }
}
