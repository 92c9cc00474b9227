#include "supergraphs/supergraph.hpp"

#include <algorithm>
#include <numeric>

#include "supergraphs/error.hpp"

namespace supergraphs {

std::string to_string(AdjacencyKind k) {
  switch (k) {
    case AdjacencyKind::power: return "power";
    case AdjacencyKind::enhanced: return "enhanced";
    case AdjacencyKind::commuting: return "commuting";
    case AdjacencyKind::nilpotent: return "nilpotent";
    case AdjacencyKind::solvable: return "solvable";
  }
  return "?";
}

std::string to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::equality: return "equality";
    case PartitionKind::conjugacy: return "conjugacy";
    case PartitionKind::same_order: return "order";
  }
  return "?";
}

AdjacencyKind parse_adjacency_kind(std::string_view s) {
  for (auto k : kAdjacencyKinds)
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown adjacency kind '" + std::string(s) + "'");
}

PartitionKind parse_partition_kind(std::string_view s) {
  if (s == "same_order" || s == "same-order") return PartitionKind::same_order;
  for (auto k : kPartitionKinds)
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown partition '" + std::string(s) + "'");
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.size());
  return out;
}

AdjacencyOracle::AdjacencyOracle(const FiniteGroup& g) : g_(&g), orders_(g.size()), powers_(g.size()) {
  for (Element x = 0; x < g.size(); ++x) orders_[x] = element_order(g, x);
}

const std::vector<Element>& AdjacencyOracle::powers(Element x) {
  auto& p = powers_.at(x);
  if (p.empty()) {
    Element y = FiniteGroup::identity();
    do {
      p.push_back(y);
      y = g_->mul(y, x);
    } while (y != FiniteGroup::identity());
    std::sort(p.begin(), p.end());
  }
  return p;
}

bool AdjacencyOracle::in_cyclic(Element x, Element of) {
  const auto& p = powers(of);
  return std::binary_search(p.begin(), p.end(), x);
}

const SubgroupFlags& AdjacencyOracle::pair_flags(Element g, Element h) {
  Subgroup s = generated_subgroup(*g_, {g, h});
  auto it = flags_.find(s.members());
  if (it == flags_.end()) it = flags_.emplace(s.members(), classify_subgroup(s)).first;
  return it->second;
}

bool AdjacencyOracle::adjacent(AdjacencyKind kind, Element g, Element h) {
  if (g == h) return false;
  switch (kind) {
    case AdjacencyKind::power:
      return in_cyclic(g, h) || in_cyclic(h, g);
    case AdjacencyKind::enhanced: {
      if (!g_->commute(g, h)) return false;
      // <g,h> = <g><h> is abelian; it is cyclic iff its exponent lcm(|g|,|h|)
      // equals its order |g||h| / |<g> n <h>|.
      const auto& pg = powers(g);
      const auto& ph = powers(h);
      std::vector<Element> common;
      std::set_intersection(pg.begin(), pg.end(), ph.begin(), ph.end(), std::back_inserter(common));
      std::uint64_t size = orders_[g] * orders_[h] / common.size();
      return std::lcm(orders_[g], orders_[h]) == size;
    }
    case AdjacencyKind::commuting:
      return g_->commute(g, h);
    case AdjacencyKind::nilpotent:
      return g_->commute(g, h) || pair_flags(g, h).is_nilpotent;
    case AdjacencyKind::solvable:
      return g_->commute(g, h) || pair_flags(g, h).is_solvable;
  }
  return false;
}

bool base_adjacent(const FiniteGroup& g, AdjacencyKind kind, Element x, Element y) {
  AdjacencyOracle oracle(g);
  return oracle.adjacent(kind, x, y);
}

Graph build_base_graph(const FiniteGroup& g, AdjacencyKind kind) {
  AdjacencyOracle oracle(g);
  Graph out(g.names());
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = x + 1; y < g.size(); ++y)
      if (oracle.adjacent(kind, x, y)) out.add_edge(x, y);
  return out;
}

namespace {

Partition from_buckets(PartitionKind kind, const FiniteGroup& g, std::vector<std::vector<Element>> classes) {
  std::vector<std::uint64_t> order(g.size());
  for (Element x = 0; x < g.size(); ++x) order[x] = element_order(g, x);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    return std::pair(order[a.front()], a.front()) < std::pair(order[b.front()], b.front());
  });
  Partition p;
  p.kind = kind;
  p.class_of.assign(g.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Element x : classes[i]) p.class_of[x] = i;
  p.classes = std::move(classes);
  return p;
}

// Elements of `cls` to hold fixed in a restricted scan: one per conjugacy
// class meeting it. For unions of conjugacy classes this is sound because
// adjacency is invariant under simultaneous conjugation.
std::vector<Element> fixed_points(const std::vector<Element>& cls, const std::vector<std::size_t>* conj_of) {
  if (!conj_of) return cls;
  std::vector<Element> out;
  std::vector<std::size_t> seen;
  for (Element x : cls) {
    std::size_t c = (*conj_of)[x];
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(c);
      out.push_back(x);
    }
  }
  return out;
}

// Symmetric class-by-class adjacency matrix, diagonal left false.
std::vector<char> class_matrix(AdjacencyOracle& oracle, AdjacencyKind kind, const Partition& p, ScanMode mode) {
  const std::size_t k = p.size();
  std::vector<std::size_t> conj_of;
  const bool reduce = mode == ScanMode::restricted && p.kind != PartitionKind::equality;
  if (reduce) {
    conj_of.assign(oracle.group().size(), 0);
    auto cc = conjugacy_classes(oracle.group());
    for (std::size_t i = 0; i < cc.size(); ++i)
      for (Element x : cc[i].members) conj_of[x] = i;
  }
  std::vector<char> m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    auto fixed = fixed_points(p.classes[i], reduce ? &conj_of : nullptr);
    for (std::size_t j = i + 1; j < k; ++j) {
      bool adj = false;
      for (Element x : fixed) {
        for (Element y : p.classes[j]) {
          if (oracle.adjacent(kind, x, y)) {
            adj = true;
            break;
          }
        }
        if (adj) break;
      }
      m[i * k + j] = m[j * k + i] = adj;
    }
  }
  return m;
}

}  // namespace

Partition build_partition(const FiniteGroup& g, PartitionKind kind) {
  const std::size_t n = g.size();
  std::vector<std::vector<Element>> buckets;
  switch (kind) {
    case PartitionKind::equality:
      for (Element x = 0; x < n; ++x) buckets.push_back({x});
      break;
    case PartitionKind::conjugacy:
      for (auto& c : conjugacy_classes(g)) buckets.push_back(std::move(c.members));
      break;
    case PartitionKind::same_order: {
      std::map<std::uint64_t, std::vector<Element>> by_order;
      for (Element x = 0; x < n; ++x) by_order[element_order(g, x)].push_back(x);
      for (auto& [o, members] : by_order) buckets.push_back(std::move(members));
      break;
    }
  }
  return from_buckets(kind, g, std::move(buckets));
}

Graph build_supergraph(const FiniteGroup& g, AdjacencyKind kind, PartitionKind pkind, ScanMode mode) {
  AdjacencyOracle oracle(g);
  Partition p = build_partition(g, pkind);
  auto m = class_matrix(oracle, kind, p, mode);
  const std::size_t k = p.size();
  Graph out(g.names());
  for (Element x = 0; x < g.size(); ++x) {
    for (Element y = x + 1; y < g.size(); ++y) {
      std::size_t cx = p.class_of[x], cy = p.class_of[y];
      if (cx == cy || m[cx * k + cy]) out.add_edge(x, y);
    }
  }
  return out;
}

Graph build_compressed(const FiniteGroup& g, AdjacencyKind kind, ScanMode mode) {
  AdjacencyOracle oracle(g);
  Partition p = build_partition(g, PartitionKind::conjugacy);
  auto m = class_matrix(oracle, kind, p, mode);
  const std::size_t k = p.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(g.name(p.representative(i)));
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (m[i * k + j]) out.add_edge(i, j);
  return out;
}

QuotientDecomposition quotient_supergraph(const FiniteGroup& g, AdjacencyKind kind, PartitionKind pkind) {
  Graph super = build_supergraph(g, kind, pkind);
  Partition p = build_partition(g, pkind);
  QuotientDecomposition q;
  std::vector<Vertex> reps;
  for (std::size_t i = 0; i < p.size(); ++i) {
    reps.push_back(p.representative(i));
    q.sizes.push_back(p.classes[i].size());
    q.witness.insert(q.witness.end(), p.classes[i].begin(), p.classes[i].end());
  }
  q.delta = induced_subgraph_ordered(super, reps);
  return q;
}

bool HierarchyReport::ok() const {
  return order_coincidence &&
         std::all_of(containments.begin(), containments.end(), [](const auto& c) { return c.holds; });
}

HierarchyReport hierarchy_report(const FiniteGroup& g) {
  HierarchyReport r;
  r.group = g.label();
  std::array<std::array<Graph, 5>, 3> graphs;
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t a = 0; a < 5; ++a) {
      graphs[b][a] = build_supergraph(g, kAdjacencyKinds[a], kPartitionKinds[b]);
      r.edge_counts[b][a] = graphs[b][a].edge_count();
    }
  }
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t a = 0; a + 1 < 5; ++a)
      r.containments.push_back({to_string(kPartitionKinds[b]) + ": " + to_string(kAdjacencyKinds[a]) +
                                    " <= " + to_string(kAdjacencyKinds[a + 1]),
                                graphs[b][a].is_spanning_subgraph_of(graphs[b][a + 1])});
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b + 1 < 3; ++b)
      r.containments.push_back({to_string(kAdjacencyKinds[a]) + ": " + to_string(kPartitionKinds[b]) +
                                    " <= " + to_string(kPartitionKinds[b + 1]),
                                graphs[b][a].is_spanning_subgraph_of(graphs[b + 1][a])});
  r.order_coincidence = graphs[2][1] == graphs[2][2];
  return r;
}

}  // namespace supergraphs
