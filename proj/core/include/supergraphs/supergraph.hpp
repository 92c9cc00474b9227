#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "supergraphs/graph.hpp"
#include "supergraphs/group.hpp"

namespace supergraphs {

/// Base adjacency, listed in spanning-subgraph order.
enum class AdjacencyKind { power, enhanced, commuting, nilpotent, solvable };
/// Element partition, listed from finest to coarsest.
enum class PartitionKind { equality, conjugacy, same_order };

inline constexpr std::array<AdjacencyKind, 5> kAdjacencyKinds{
    AdjacencyKind::power, AdjacencyKind::enhanced, AdjacencyKind::commuting,
    AdjacencyKind::nilpotent, AdjacencyKind::solvable};
inline constexpr std::array<PartitionKind, 3> kPartitionKinds{
    PartitionKind::equality, PartitionKind::conjugacy, PartitionKind::same_order};

std::string to_string(AdjacencyKind k);
/// CLI names: equality, conjugacy, order.
std::string to_string(PartitionKind k);
AdjacencyKind parse_adjacency_kind(std::string_view s);
/// Accepts "order" and "same_order".
PartitionKind parse_partition_kind(std::string_view s);

/// Whether class-level adjacency fixes one representative of the first class
/// (sound because adjacency is invariant under conjugation) or tries all pairs.
enum class ScanMode { restricted, full };

struct Partition {
  PartitionKind kind = PartitionKind::equality;
  /// Sorted member lists, ordered by (element order, minimum element).
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
  Element representative(std::size_t i) const { return classes.at(i).front(); }
  std::vector<std::size_t> sizes() const;
};

/// Memoising decision procedure for the five base adjacencies of one group.
class AdjacencyOracle {
 public:
  explicit AdjacencyOracle(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return *g_; }
  std::uint64_t order(Element x) const { return orders_[x]; }
  /// Sorted powers of x, i.e. the members of <x>.
  const std::vector<Element>& powers(Element x);
  /// Adjacency of two distinct elements; false when g == h.
  bool adjacent(AdjacencyKind kind, Element g, Element h);
  /// Flags of <g, h>, memoised by the member set.
  const SubgroupFlags& pair_flags(Element g, Element h);

 private:
  bool in_cyclic(Element x, Element of);

  const FiniteGroup* g_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<Element>> powers_;
  std::map<std::vector<Element>, SubgroupFlags> flags_;
};

bool base_adjacent(const FiniteGroup& g, AdjacencyKind kind, Element x, Element y);
/// One vertex per element, labelled by element name.
Graph build_base_graph(const FiniteGroup& g, AdjacencyKind kind);
Partition build_partition(const FiniteGroup& g, PartitionKind kind);
/// B super-A graph: g ~ h iff they share a class, or some members of their
/// classes are A-adjacent.
Graph build_supergraph(const FiniteGroup& g, AdjacencyKind kind, PartitionKind pkind,
                       ScanMode mode = ScanMode::restricted);
/// Compressed conjugacy supergraph: one vertex per conjugacy class, labelled
/// by the representative's name, in conjugacy_classes order.
Graph build_compressed(const FiniteGroup& g, AdjacencyKind kind, ScanMode mode = ScanMode::restricted);

struct QuotientDecomposition {
  Graph delta;                      // induced on class representatives
  std::vector<std::size_t> sizes;   // class sizes in class order
  /// witness[v] is the element placed at vertex v of delta[K_{n_1}, ...]:
  /// class blocks in class order, members ascending inside each block.
  std::vector<Element> witness;
};

QuotientDecomposition quotient_supergraph(const FiniteGroup& g, AdjacencyKind kind, PartitionKind pkind);

struct HierarchyCheck {
  std::string description;  // e.g. "conjugacy: power <= enhanced"
  bool holds = false;
};

struct HierarchyReport {
  std::string group;
  std::vector<HierarchyCheck> containments;
  /// Order super-enhanced graph equals order super-commuting graph.
  bool order_coincidence = false;
  /// edge_counts[partition][adjacency], both in enum order.
  std::array<std::array<std::size_t, 5>, 3> edge_counts{};

  bool ok() const;
};

HierarchyReport hierarchy_report(const FiniteGroup& g);

}  // namespace supergraphs
