#include "supergraphs/closed_forms.hpp"

#include <algorithm>

#include "supergraphs/distance.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/supergraph.hpp"

namespace supergraphs {

namespace {

bool is_dihedral(FamilyKind f) { return f == FamilyKind::escom_dihedral || f == FamilyKind::cscom_dihedral; }
bool is_cscom(FamilyKind f) { return f == FamilyKind::cscom_dihedral || f == FamilyKind::cscom_quaternion; }

void require_range(FamilyKind f, int n) {
  if (n < family_min_n(f))
    throw InvalidArgument(to_string(f) + " needs n >= " + std::to_string(family_min_n(f)) + ", got " +
                          std::to_string(n));
}

std::vector<GraphExpr> repeat(std::size_t count, const GraphExpr& e) { return std::vector<GraphExpr>(count, e); }

GraphExpr K(std::size_t n) { return GraphExpr::complete(n); }

std::vector<GraphExpr> concat(std::initializer_list<std::vector<GraphExpr>> parts) {
  std::vector<GraphExpr> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::string to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::escom_dihedral: return "escom-d";
    case FamilyKind::escom_quaternion: return "escom-q";
    case FamilyKind::cscom_dihedral: return "cscom-d";
    case FamilyKind::cscom_quaternion: return "cscom-q";
  }
  return "?";
}

FamilyKind parse_family(std::string_view s) {
  for (auto f : {FamilyKind::escom_dihedral, FamilyKind::escom_quaternion, FamilyKind::cscom_dihedral,
                 FamilyKind::cscom_quaternion})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

int family_min_n(FamilyKind f) { return is_dihedral(f) ? 3 : 2; }

GroupSpec family_group(FamilyKind f, int n) {
  return is_dihedral(f) ? GroupSpec::dihedral(n) : GroupSpec::quaternion(n);
}

Graph family_graph(FamilyKind f, const FiniteGroup& g) {
  return build_supergraph(g, AdjacencyKind::commuting,
                          is_cscom(f) ? PartitionKind::conjugacy : PartitionKind::equality);
}

std::string family_case(FamilyKind f, int n) {
  require_range(f, n);
  switch (f) {
    case FamilyKind::escom_dihedral:
      return n % 2 ? "n odd" : "n even";
    case FamilyKind::escom_quaternion:
      return "all n";
    case FamilyKind::cscom_dihedral:
      if (n % 2) return "n odd";
      return (n / 2) % 2 ? "n even, n/2 odd" : "n even, n/2 even";
    case FamilyKind::cscom_quaternion:
      return n % 2 ? "n odd" : "n even";
  }
  return "?";
}

GraphExpr structure_expr(FamilyKind f, int n) {
  require_range(f, n);
  const auto m = static_cast<std::size_t>(n);
  switch (f) {
    case FamilyKind::escom_dihedral:
      if (m % 2) return GraphExpr::join(K(1), GraphExpr::disjoint_union(concat({repeat(m, K(1)), {K(m - 1)}})));
      return GraphExpr::join(K(2), GraphExpr::disjoint_union(concat({repeat(m / 2, K(2)), {K(m - 2)}})));
    case FamilyKind::escom_quaternion:
      return GraphExpr::join(K(2), GraphExpr::disjoint_union(concat({repeat(m, K(2)), {K(2 * m - 2)}})));
    case FamilyKind::cscom_dihedral: {
      if (m % 2) {
        const std::size_t r = (m - 1) / 2;
        return GraphExpr::composition(GraphExpr::join(K(1), GraphExpr::disjoint_union({K(r), K(1)})),
                                      concat({{K(1)}, repeat(r, K(2)), {K(m)}}));
      }
      const std::size_t r = m / 2 - 1;
      // The two reflection classes are adjacent exactly when a^{n/2} b lies
      // in the other class, i.e. when n/2 is odd.
      GraphExpr reflections = (m / 2) % 2 ? GraphExpr::disjoint_union({K(r), K(2)})
                                          : GraphExpr::disjoint_union({K(r), K(1), K(1)});
      return GraphExpr::composition(GraphExpr::join(K(2), std::move(reflections)),
                                    concat({{K(1), K(1)}, repeat(r, K(2)), {K(m / 2), K(m / 2)}}));
    }
    case FamilyKind::cscom_quaternion: {
      const std::size_t r = m - 1;
      GraphExpr outer = m % 2 ? GraphExpr::disjoint_union({K(r), K(2)})
                              : GraphExpr::disjoint_union({K(r), K(1), K(1)});
      return GraphExpr::composition(GraphExpr::join(K(2), std::move(outer)),
                                    concat({{K(1), K(1)}, repeat(r, K(2)), {K(m), K(m)}}));
    }
  }
  throw InvalidArgument("unknown family");
}

std::uint64_t wiener_closed_form(FamilyKind f, int n) {
  require_range(f, n);
  const std::int64_t x = n;
  std::int64_t w = 0;
  switch (f) {
    case FamilyKind::escom_dihedral:
      w = n % 2 ? (7 * x * x - 5 * x) / 2 : (7 * x * x - 8 * x) / 2;
      break;
    case FamilyKind::escom_quaternion:
      w = 14 * x * x - 8 * x;
      break;
    case FamilyKind::cscom_dihedral:
      if (n % 2) w = (5 * x * x - 2 * x + 3) / 2;
      else if ((n / 2) % 2 == 0) w = 2 * x * x + 7 * x - 20;
      else w = 2 * x * x + 7 * x - 24;
      break;
    case FamilyKind::cscom_quaternion:
      w = n % 2 == 0 ? 8 * x * x + 14 * x - 20 : 8 * x * x + 14 * x - 24;
      break;
  }
  return static_cast<std::uint64_t>(w);
}

std::uint64_t wiener_class_count_form(FamilyKind f, int n) {
  require_range(f, n);
  const std::int64_t x = n;
  switch (f) {
    case FamilyKind::escom_dihedral:
    case FamilyKind::escom_quaternion:
      return wiener_closed_form(f, n);
    case FamilyKind::cscom_dihedral:
      if (n % 2) return static_cast<std::uint64_t>(3 * x * x - 2 * x);
      if ((n / 2) % 2 == 0) return static_cast<std::uint64_t>(13 * x * x / 4 - 3 * x);
      return static_cast<std::uint64_t>(3 * x * x - 3 * x);
    case FamilyKind::cscom_quaternion:
      // CSCom(Q_4n) is CSCom(D_4n), i.e. the dihedral form at 2n.
      return static_cast<std::uint64_t>(n % 2 == 0 ? 13 * x * x - 6 * x : 12 * x * x - 6 * x);
  }
  return 0;
}

bool FamilyReport::pass() const {
  return !records.empty() && std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

FamilyReport verify_family(FamilyKind f, int n_from, int n_to) {
  FamilyReport report;
  report.family = f;
  for (int n = n_from; n <= n_to; ++n) {
    FamilyRecord r;
    r.n = n;
    r.case_name = family_case(f, n);
    FiniteGroup g = make_group(family_group(f, n));
    Graph actual = family_graph(f, g);
    r.vertices = actual.size();
    r.edges = actual.edge_count();
    if (auto iso = find_isomorphism(eval_expr(structure_expr(f, n)), actual)) {
      r.isomorphic = true;
      r.witness.assign(iso->begin(), iso->end());
    }
    r.wiener_bfs = wiener_index(actual);
    auto q = quotient_supergraph(g, AdjacencyKind::commuting,
                                 is_cscom(f) ? PartitionKind::conjugacy : PartitionKind::equality);
    r.wiener_formula = wiener_supergraph_formula(q.delta, q.sizes);
    r.wiener_composition = wiener_via_composition(CompositionWitness::make(
        q.delta, q.sizes, std::vector<FactorKind>(q.sizes.size(), FactorKind::complete)));
    r.wiener_closed = wiener_closed_form(f, n);
    r.pass = r.isomorphic && r.wiener_bfs == r.wiener_formula && r.wiener_bfs == r.wiener_composition &&
             r.wiener_bfs == r.wiener_closed;
    report.records.push_back(std::move(r));
  }
  return report;
}

bool quaternion_matches_dihedral(int n, bool conjugacy) {
  if (n < 2) throw InvalidArgument("quaternion family needs n >= 2");
  FiniteGroup q = make_group(GroupSpec::quaternion(n));
  FiniteGroup d = make_group(GroupSpec::dihedral(2 * n));
  auto kind = conjugacy ? FamilyKind::cscom_quaternion : FamilyKind::escom_quaternion;
  auto dkind = conjugacy ? FamilyKind::cscom_dihedral : FamilyKind::escom_dihedral;
  return is_isomorphic(family_graph(kind, q), family_graph(dkind, d));
}

}  // namespace supergraphs
