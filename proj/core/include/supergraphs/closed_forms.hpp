#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supergraphs/graph_expr.hpp"
#include "supergraphs/group.hpp"

namespace supergraphs {

/// ESCom = equality super-commuting (the commuting graph), CSCom = conjugacy
/// super-commuting, on dihedral D_2n or generalized quaternion Q_4n.
enum class FamilyKind { escom_dihedral, escom_quaternion, cscom_dihedral, cscom_quaternion };

/// CLI names escom-d, escom-q, cscom-d, cscom-q.
std::string to_string(FamilyKind f);
FamilyKind parse_family(std::string_view s);

/// Smallest supported parameter: 3 for dihedral families, 2 for quaternion.
int family_min_n(FamilyKind f);
GroupSpec family_group(FamilyKind f, int n);
Graph family_graph(FamilyKind f, const FiniteGroup& g);

/// Which case of the structure decomposition applies, e.g. "n odd", "n even, n/2 odd".
std::string family_case(FamilyKind f, int n);

/// Closed-form structure of the family graph. Composition factors follow class
/// semantics: identity-order classes, rotation classes by exponent, then the
/// reflection (or a^i b) classes. Throws InvalidArgument below family_min_n.
GraphExpr structure_expr(FamilyKind f, int n);

/// The published piecewise closed form for the Wiener index.
std::uint64_t wiener_closed_form(FamilyKind f, int n);
/// Closed form obtained by summing over the class decomposition directly;
/// agrees with wiener_closed_form for ESCom but not for every CSCom case.
std::uint64_t wiener_class_count_form(FamilyKind f, int n);

struct FamilyRecord {
  int n = 0;
  std::string case_name;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint64_t wiener_bfs = 0;
  std::uint64_t wiener_composition = 0;  // composition-witness formula on the quotient
  std::uint64_t wiener_formula = 0;      // supergraph formula on the quotient
  std::uint64_t wiener_closed = 0;
  bool isomorphic = false;
  std::vector<std::size_t> witness;  // structure-graph vertex -> element
  bool pass = false;
};

struct FamilyReport {
  FamilyKind family = FamilyKind::escom_dihedral;
  std::vector<FamilyRecord> records;
  bool pass() const;
};

/// Builds each group in [n_from, n_to], checks the structure isomorphism and
/// that BFS, both composition formulas and the closed form agree exactly.
FamilyReport verify_family(FamilyKind f, int n_from, int n_to);

/// ESCom(Q_4n) vs ESCom(D_4n) (or CSCom when `conjugacy`), by isomorphism search.
bool quaternion_matches_dihedral(int n, bool conjugacy);

}  // namespace supergraphs
