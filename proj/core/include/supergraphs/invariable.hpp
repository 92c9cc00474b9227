#pragma once

#include <string>
#include <vector>

#include "supergraphs/graph.hpp"
#include "supergraphs/group.hpp"
#include "supergraphs/supergraph.hpp"

namespace supergraphs {

/// g ~ h iff <g, h> = G.
Graph generating_graph(const FiniteGroup& g);

/// x ~ y iff <x', y'> = G for all conjugates x' of x and y' of y. Restricted
/// mode fixes x' = x and scans y^G, which suffices by simultaneous conjugation.
Graph invariable_generating_graph(const FiniteGroup& g, ScanMode mode = ScanMode::restricted);

/// Group property used by the containment propositions.
enum class PropertyKind { abelian, nilpotent, solvable };
std::string to_string(PropertyKind k);
/// The adjacency whose graph the property's complement is taken of.
AdjacencyKind adjacency_for(PropertyKind k);

struct ContainmentReport {
  std::string group;
  PropertyKind kind = PropertyKind::abelian;
  /// "generating" (generating graph vs complement of the A graph) or
  /// "invariable" (invariable generating graph vs complement of the
  /// conjugacy super-A graph).
  std::string relation;
  bool applicable = false;
  std::string note;
  bool contained = false;
  bool equal = false;
  std::vector<Edge> violations;
};

/// Both containments for each property the group lacks; properties the
/// group has are reported as not applicable.
std::vector<ContainmentReport> containment_checks(const FiniteGroup& g);

struct EqualityScanRow {
  std::string group;
  PropertyKind kind = PropertyKind::abelian;
  bool applicable = false;
  bool equal = false;
  std::string note;
};

struct EqualityScanReport {
  std::vector<EqualityScanRow> rows;
  /// "<group>:<property>" for every applicable row with equality.
  std::vector<std::string> equality;
  /// Zero violations of either containment across the scan.
  bool containments_hold = true;
};

/// Records, per group and property, whether the invariable generating graph
/// equals the complement of the conjugacy super-A graph. Groups over the cap
/// are skipped with a note.
EqualityScanReport equality_scan(const std::vector<GroupSpec>& catalog);

}  // namespace supergraphs
