#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/graph.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/supergraph.hpp"

using namespace supergraphs;

namespace {

std::vector<GroupSpec> small_groups() {
  auto c = default_catalog();
  c.push_back(GroupSpec::dihedral(6));
  c.push_back(GroupSpec::quaternion(3));
  c.push_back(GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(2)));
  c.push_back(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::quaternion(2)));
  return c;
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto k : kAdjacencyKinds) EXPECT_EQ(parse_adjacency_kind(to_string(k)), k);
  for (auto k : kPartitionKinds) EXPECT_EQ(parse_partition_kind(to_string(k)), k);
  EXPECT_EQ(parse_partition_kind("same_order"), PartitionKind::same_order);
  EXPECT_THROW(parse_adjacency_kind("bogus"), InvalidArgument);
}

TEST(BaseAdjacency, MatchesDefinitions) {
  for (const auto& spec : small_groups()) {
    FiniteGroup g = make_group(spec);
    AdjacencyOracle o(g);
    for (auto kind : kAdjacencyKinds)
      for (Element x = 0; x < g.size(); ++x)
        for (Element y = 0; y < g.size(); ++y) {
          bool expected = x != y && oracle::definitional_adjacent(g, kind, x, y);
          ASSERT_EQ(o.adjacent(kind, x, y), expected)
              << spec.label() << " " << to_string(kind) << " " << g.name(x) << " " << g.name(y);
        }
  }
}

TEST(BaseAdjacency, S3Examples) {
  FiniteGroup s3 = make_group(GroupSpec::symmetric(3));
  EXPECT_EQ(build_base_graph(s3, AdjacencyKind::power).edge_count(), 6u);
  EXPECT_EQ(build_base_graph(s3, AdjacencyKind::commuting).edge_count(), 6u);
  EXPECT_TRUE(build_base_graph(s3, AdjacencyKind::solvable).is_complete());
  EXPECT_EQ(build_base_graph(s3, AdjacencyKind::power).labels(), s3.names());
}

TEST(Supergraph, MatchesDefinitionalConstruction) {
  for (const auto& spec : small_groups()) {
    FiniteGroup g = make_group(spec);
    for (auto kind : kAdjacencyKinds)
      for (auto pkind : kPartitionKinds)
        EXPECT_EQ(build_supergraph(g, kind, pkind), oracle::definitional_supergraph(g, kind, pkind))
            << spec.label() << " " << to_string(pkind) << " " << to_string(kind);
  }
}

TEST(Supergraph, RestrictedScanEqualsFullScan) {
  for (const auto& spec : small_groups()) {
    FiniteGroup g = make_group(spec);
    if (g.size() > 24) continue;
    for (auto kind : kAdjacencyKinds) {
      for (auto pkind : kPartitionKinds)
        EXPECT_EQ(build_supergraph(g, kind, pkind, ScanMode::restricted),
                  build_supergraph(g, kind, pkind, ScanMode::full));
      EXPECT_EQ(build_compressed(g, kind, ScanMode::restricted), build_compressed(g, kind, ScanMode::full));
    }
  }
}

TEST(Supergraph, EqualityPartitionGivesBaseGraph) {
  for (const auto& spec : small_groups()) {
    FiniteGroup g = make_group(spec);
    for (auto kind : kAdjacencyKinds)
      EXPECT_EQ(build_supergraph(g, kind, PartitionKind::equality).edges(), build_base_graph(g, kind).edges());
  }
}

TEST(Supergraph, SpecExamples) {
  FiniteGroup d6 = make_group(GroupSpec::dihedral(3));
  Graph g = build_supergraph(d6, AdjacencyKind::commuting, PartitionKind::conjugacy);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);

  FiniteGroup s3 = make_group(GroupSpec::symmetric(3));
  Graph c = build_compressed(s3, AdjacencyKind::commuting);
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"e", "(2 3)", "(1 2 3)"}));
  EXPECT_TRUE(is_isomorphic(c, Graph::path(3)));
  EXPECT_EQ(c.degree(0), 2u);
}

TEST(Supergraph, PartitionsAreOrdered) {
  FiniteGroup g = make_group(GroupSpec::dihedral(4));
  for (auto pkind : kPartitionKinds) {
    Partition p = build_partition(g, pkind);
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p.classes[i].size();
      for (Element x : p.classes[i]) EXPECT_EQ(p.class_of[x], i);
      if (i) {
        auto prev = std::pair(element_order(g, p.representative(i - 1)), p.representative(i - 1));
        auto cur = std::pair(element_order(g, p.representative(i)), p.representative(i));
        EXPECT_LT(prev, cur);
      }
    }
    EXPECT_EQ(total, g.size());
  }
  EXPECT_EQ(build_partition(g, PartitionKind::same_order).sizes(), (std::vector<std::size_t>{1, 5, 2}));
}

TEST(Quotient, WitnessIsIsomorphism) {
  for (const auto& spec : small_groups()) {
    FiniteGroup g = make_group(spec);
    for (auto kind : kAdjacencyKinds)
      for (auto pkind : kPartitionKinds) {
        auto q = quotient_supergraph(g, kind, pkind);
        std::vector<Graph> factors;
        for (auto s : q.sizes) factors.push_back(Graph::complete(s));
        Graph composed = compose(q.delta, factors);
        Graph super = build_supergraph(g, kind, pkind);
        ASSERT_EQ(q.witness.size(), g.size());
        // Vertex v of the composition is the element witness[v] of the supergraph.
        std::vector<Vertex> mapping(q.witness.begin(), q.witness.end());
        EXPECT_TRUE(is_isomorphism(composed, super, mapping)) << spec.label();
      }
  }
}

TEST(Quotient, D6Example) {
  auto q = quotient_supergraph(make_group(GroupSpec::dihedral(3)), AdjacencyKind::commuting,
                               PartitionKind::conjugacy);
  EXPECT_EQ(q.sizes, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(q.delta.labels(), (std::vector<std::string>{"e", "b", "a"}));
  EXPECT_EQ(q.delta.edge_count(), 2u);
}

TEST(Hierarchy, HoldsOnCatalog) {
  for (const auto& spec : default_catalog(true)) {
    auto r = hierarchy_report(make_group(spec));
    EXPECT_EQ(r.containments.size(), 22u);
    EXPECT_TRUE(r.order_coincidence) << spec.label();
    EXPECT_TRUE(r.ok()) << spec.label();
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t a = 1; a < 5; ++a) EXPECT_LE(r.edge_counts[p][a - 1], r.edge_counts[p][a]);
  }
}
