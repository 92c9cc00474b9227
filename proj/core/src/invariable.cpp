#include "supergraphs/invariable.hpp"

#include <algorithm>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

class GenerationOracle {
 public:
  explicit GenerationOracle(const FiniteGroup& g) : g_(g), memo_(g.size() * g.size(), -1) {}

  bool generates(Element x, Element y) {
    auto& m = memo_[static_cast<std::size_t>(x) * g_.size() + y];
    if (m < 0) {
      m = generated_subgroup(g_, {x, y}).size() == g_.size();
      memo_[static_cast<std::size_t>(y) * g_.size() + x] = m;
    }
    return m;
  }

 private:
  const FiniteGroup& g_;
  std::vector<signed char> memo_;
};

ContainmentReport compare(const std::string& group, PropertyKind kind, std::string relation,
                          const Graph& left, const Graph& forbidden) {
  ContainmentReport r;
  r.group = group;
  r.kind = kind;
  r.relation = std::move(relation);
  r.applicable = true;
  Graph right = forbidden.complement();
  for (auto [u, v] : left.edges())
    if (!right.has_edge(u, v)) r.violations.emplace_back(u, v);
  r.contained = r.violations.empty();
  r.equal = r.contained && left.edge_count() == right.edge_count();
  return r;
}

}  // namespace

Graph generating_graph(const FiniteGroup& g) {
  GenerationOracle oracle(g);
  Graph out(g.names());
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = x + 1; y < g.size(); ++y)
      if (oracle.generates(x, y)) out.add_edge(x, y);
  return out;
}

Graph invariable_generating_graph(const FiniteGroup& g, ScanMode mode) {
  GenerationOracle oracle(g);
  Partition classes = build_partition(g, PartitionKind::conjugacy);
  Graph out(g.names());
  for (Element x = 0; x < g.size(); ++x) {
    for (Element y = x + 1; y < g.size(); ++y) {
      std::vector<Element> xs{x};
      if (mode == ScanMode::full) xs = classes.classes[classes.class_of[x]];
      const auto& ys = classes.classes[classes.class_of[y]];
      bool all = true;
      for (Element a : xs) {
        for (Element b : ys)
          if (!oracle.generates(a, b)) {
            all = false;
            break;
          }
        if (!all) break;
      }
      if (all) out.add_edge(x, y);
    }
  }
  return out;
}

std::string to_string(PropertyKind k) {
  switch (k) {
    case PropertyKind::abelian: return "abelian";
    case PropertyKind::nilpotent: return "nilpotent";
    case PropertyKind::solvable: return "solvable";
  }
  return "?";
}

AdjacencyKind adjacency_for(PropertyKind k) {
  switch (k) {
    case PropertyKind::abelian: return AdjacencyKind::commuting;
    case PropertyKind::nilpotent: return AdjacencyKind::nilpotent;
    case PropertyKind::solvable: return AdjacencyKind::solvable;
  }
  return AdjacencyKind::commuting;
}

std::vector<ContainmentReport> containment_checks(const FiniteGroup& g) {
  std::vector<ContainmentReport> out;
  const SubgroupFlags flags = classify_subgroup(whole_group(g));
  Graph gen = generating_graph(g);
  Graph igg = invariable_generating_graph(g);
  for (auto kind : {PropertyKind::abelian, PropertyKind::nilpotent, PropertyKind::solvable}) {
    const bool has = kind == PropertyKind::abelian     ? flags.is_abelian
                     : kind == PropertyKind::nilpotent ? flags.is_nilpotent
                                                       : flags.is_solvable;
    if (has) {
      for (const char* rel : {"generating", "invariable"}) {
        ContainmentReport r;
        r.group = g.label();
        r.kind = kind;
        r.relation = rel;
        r.note = "skipped: " + g.label() + " is " + to_string(kind);
        out.push_back(std::move(r));
      }
      continue;
    }
    const AdjacencyKind a = adjacency_for(kind);
    out.push_back(compare(g.label(), kind, "generating", gen, build_base_graph(g, a)));
    out.push_back(compare(g.label(), kind, "invariable", igg, build_supergraph(g, a, PartitionKind::conjugacy)));
  }
  return out;
}

EqualityScanReport equality_scan(const std::vector<GroupSpec>& catalog) {
  EqualityScanReport report;
  for (const auto& spec : catalog) {
    std::vector<ContainmentReport> checks;
    try {
      FiniteGroup g = make_group(spec);
      checks = containment_checks(g);
    } catch (const CapExceeded& e) {
      for (auto kind : {PropertyKind::abelian, PropertyKind::nilpotent, PropertyKind::solvable})
        report.rows.push_back({spec.label(), kind, false, false, std::string("skipped: ") + e.what()});
      continue;
    }
    for (const auto& c : checks) {
      if (c.applicable && !c.contained) report.containments_hold = false;
      if (c.relation != "invariable") continue;
      report.rows.push_back({c.group, c.kind, c.applicable, c.equal, c.note});
      if (c.applicable && c.equal) report.equality.push_back(c.group + ":" + to_string(c.kind));
    }
  }
  return report;
}

}  // namespace supergraphs
