#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/universality.hpp"

using namespace supergraphs;

TEST(Primes, Basics) {
  EXPECT_EQ(primes_first(6), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
}

TEST(PermGroupFacts, KnownGroups) {
  auto s4 = perm_group_facts(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3, 4}})});
  EXPECT_EQ(s4.order, 24u);
  EXPECT_TRUE(s4.solvable);
  EXPECT_FALSE(s4.nilpotent);
  auto a5 = perm_group_facts(5, {Permutation::from_cycles(5, {{1, 2, 3}}), Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})});
  EXPECT_EQ(a5.order, 60u);
  EXPECT_FALSE(a5.solvable);
  auto c15 = perm_group_facts(8, {Permutation::from_cycles(8, {{1, 2, 3}}), Permutation::from_cycles(8, {{4, 5, 6, 7, 8}})});
  EXPECT_EQ(c15.order, 15u);
  EXPECT_TRUE(c15.nilpotent);
}

TEST(ClassAdjacency, ArithmeticRuleForOddPrimes) {
  // Distinct-prime cycle classes meet iff the cycles fit disjointly.
  for (std::size_t n = 5; n <= 7; ++n)
    for (std::uint64_t p : {3, 5, 7})
      for (std::uint64_t q : {3, 5, 7}) {
        if (p >= q || q > n) continue;
        for (auto kind : {AdjacencyKind::commuting, AdjacencyKind::enhanced, AdjacencyKind::nilpotent,
                          AdjacencyKind::solvable}) {
          auto r = class_adjacency(n, p, q, kind);
          EXPECT_EQ(r.adjacent, p + q <= n) << n << " " << p << " " << q << " " << to_string(kind);
        }
      }
}

TEST(ClassAdjacency, S7ThreeFiveScan) {
  ClassAdjacencyOptions opts;
  opts.fix_longer = false;
  opts.exhaustive = true;
  auto r = class_adjacency(7, 3, 5, AdjacencyKind::solvable, opts);
  EXPECT_FALSE(r.adjacent);
  EXPECT_EQ(r.candidates, 504u);
  EXPECT_EQ(r.commuting_candidates, 0u);
  std::map<std::string, std::size_t> expected{{"60", 144}, {"360", 288}, {"2520", 72}};
  EXPECT_EQ(r.generated_orders, expected);
}

TEST(ClassAdjacency, TwoCyclesAdjacentWhenRoom) {
  EXPECT_TRUE(class_adjacency(7, 2, 5, AdjacencyKind::commuting).adjacent);
  EXPECT_FALSE(class_adjacency(6, 2, 5, AdjacencyKind::commuting).adjacent);
}

TEST(ClassAdjacency, OrderCertificateAboveClosureDegree) {
  auto r = class_adjacency(11, 5, 7, AdjacencyKind::solvable);
  EXPECT_FALSE(r.adjacent);
  EXPECT_NE(r.method.find("order-certificate"), std::string::npos);
}

TEST(ClassAdjacency, Rejections) {
  EXPECT_THROW(class_adjacency(kMaxSymmetricDegree + 1, 3, 5, AdjacencyKind::commuting), CapExceeded);
  EXPECT_THROW(class_adjacency(7, 3, 3, AdjacencyKind::commuting), InvalidArgument);
  EXPECT_THROW(class_adjacency(7, 3, 4, AdjacencyKind::commuting), InvalidArgument);
  EXPECT_THROW(class_adjacency(7, 3, 5, AdjacencyKind::power), InvalidArgument);
}

TEST(Step3, Degrees) {
  EXPECT_EQ(step3_degree({2, 3, 5}, true), 7u);
  EXPECT_EQ(step3_degree({2, 3, 5}, false), 8u);
  EXPECT_THROW(step3_embedding(6, AdjacencyKind::commuting, true), CapExceeded);
}

TEST(Step3, CompleteMinusEdge) {
  for (auto kind : {AdjacencyKind::commuting, AdjacencyKind::enhanced, AdjacencyKind::nilpotent,
                    AdjacencyKind::solvable}) {
    auto r = step3_embedding(3, kind, true);
    EXPECT_EQ(r.degree, 7u);
    EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
    EXPECT_EQ(r.graph.label(2), "5-cycles");
  }
  auto k = step3_embedding(3, AdjacencyKind::commuting, false);
  EXPECT_TRUE(k.graph.is_complete());
}

TEST(Embedding, SmallTargets) {
  for (auto kind : {AdjacencyKind::commuting, AdjacencyKind::nilpotent, AdjacencyKind::solvable}) {
    auto cert = embed_graph(Graph::path(3), kind);
    EXPECT_TRUE(cert.verified) << to_string(kind);
    EXPECT_TRUE(is_isomorphic(cert.final_graph, Graph::path(3)));
  }
  auto c4 = embed_graph(Graph::cycle(4), AdjacencyKind::commuting);
  EXPECT_TRUE(c4.verified);
  EXPECT_EQ(c4.factors.size(), 2u);
  EXPECT_TRUE(c4.diagonal_checked);
  EXPECT_TRUE(c4.diagonal_matches);
  auto k3 = embed_graph(Graph::complete(3), AdjacencyKind::commuting);
  EXPECT_TRUE(k3.verified);
  ASSERT_EQ(k3.factors.size(), 1u);
  EXPECT_EQ(k3.factors[0].degree, 8u);
}

TEST(Embedding, RandomTargetsCommuting) {
  std::mt19937 rng(37);
  for (int t = 0; t < 4; ++t) {
    Graph target = oracle::random_graph(rng, 3 + rng() % 2, 0.6);
    auto cert = embed_graph(target, AdjacencyKind::commuting);
    EXPECT_TRUE(cert.verified);
    for (auto [u, v] : target.edges()) EXPECT_TRUE(cert.final_graph.has_edge(cert.witness[u], cert.witness[v]));
  }
}

TEST(Embedding, Enhanced) {
  auto cert = enhanced_embed(Graph::path(3));
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(cert.coprime_check);
  EXPECT_THROW(enhanced_embed(Graph::cycle(4), {{2, 3, 5, 7}, {7, 11, 13, 17}}), InvalidArgument);
}

TEST(StrongProduct, IdentityHolds) {
  for (auto kind : {AdjacencyKind::commuting, AdjacencyKind::nilpotent, AdjacencyKind::solvable}) {
    auto r = strong_product_identity_check(GroupSpec::symmetric(3), GroupSpec::dihedral(4), kind);
    EXPECT_TRUE(r.holds) << to_string(kind);
    EXPECT_EQ(r.direct.size(), 3u * 5u);
  }
  EXPECT_THROW(strong_product_identity_check(GroupSpec::symmetric(3), GroupSpec::cyclic(2), AdjacencyKind::power),
               InvalidArgument);
}
