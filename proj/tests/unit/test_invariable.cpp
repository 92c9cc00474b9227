#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "supergraphs/invariable.hpp"

using namespace supergraphs;

TEST(Invariable, S3Counts) {
  FiniteGroup s3 = make_group(GroupSpec::symmetric(3));
  EXPECT_EQ(generating_graph(s3).edge_count(), 9u);
  EXPECT_EQ(invariable_generating_graph(s3).edge_count(), 6u);
}

TEST(Invariable, Q8Count) {
  EXPECT_EQ(invariable_generating_graph(make_group(GroupSpec::quaternion(2))).edge_count(), 12u);
}

TEST(Invariable, GeneratingGraphMatchesClosure) {
  for (const auto& spec : default_catalog()) {
    FiniteGroup g = make_group(spec);
    Graph gen = generating_graph(g);
    for (Element x = 0; x < g.size(); ++x)
      for (Element y = x + 1; y < g.size(); ++y)
        EXPECT_EQ(gen.has_edge(x, y), oracle::naive_closure(g, {x, y}).size() == g.size());
  }
}

TEST(Invariable, RestrictedEqualsFullAndIsContained) {
  for (const auto& spec : default_catalog(true)) {
    FiniteGroup g = make_group(spec);
    Graph r = invariable_generating_graph(g, ScanMode::restricted);
    EXPECT_EQ(r, invariable_generating_graph(g, ScanMode::full)) << spec.label();
    EXPECT_TRUE(r.is_spanning_subgraph_of(generating_graph(g))) << spec.label();
  }
}

TEST(Invariable, ContainmentsHold) {
  for (const auto& spec : default_catalog(true)) {
    for (const auto& rep : containment_checks(make_group(spec))) {
      if (!rep.applicable) {
        EXPECT_FALSE(rep.note.empty());
        continue;
      }
      EXPECT_TRUE(rep.contained) << spec.label() << " " << to_string(rep.kind) << " " << rep.relation;
      EXPECT_TRUE(rep.violations.empty());
    }
  }
}

TEST(Invariable, AbelianGroupsSkipEverything) {
  auto reps = containment_checks(make_group(GroupSpec::cyclic(6)));
  EXPECT_EQ(reps.size(), 6u);
  EXPECT_TRUE(std::none_of(reps.begin(), reps.end(), [](const auto& r) { return r.applicable; }));
}

TEST(Invariable, EqualityScan) {
  auto report = equality_scan(default_catalog());
  EXPECT_TRUE(report.containments_hold);
  EXPECT_NE(std::find(report.equality.begin(), report.equality.end(), "S3:abelian"), report.equality.end());
}
