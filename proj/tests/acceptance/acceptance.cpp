// Acceptance suite: one PASS/FAIL line per criterion, exact integers only.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "supergraphs/closed_forms.hpp"
#include "supergraphs/comparability.hpp"
#include "supergraphs/distance.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/invariable.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/supergraph.hpp"
#include "supergraphs/universality.hpp"

using namespace supergraphs;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << " first failures:";
    pass = false;
    // Keep the line readable; count the rest.
    if (++failures <= 6) detail << " " << what << ";";
  }
  int failures = 0;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0: no runtime bound
  std::function<void(Outcome&)> body;
};

constexpr FamilyKind kFamilies[] = {FamilyKind::escom_dihedral, FamilyKind::cscom_dihedral,
                                    FamilyKind::escom_quaternion, FamilyKind::cscom_quaternion};

int family_max_n(FamilyKind f) {
  return f == FamilyKind::escom_quaternion || f == FamilyKind::cscom_quaternion ? 12 : 20;
}

// verify_family over the full ranges, shared by the first three criteria.
const std::vector<FamilyReport>& family_reports() {
  static const std::vector<FamilyReport> reports = [] {
    std::vector<FamilyReport> out;
    for (auto f : kFamilies) out.push_back(verify_family(f, family_min_n(f), family_max_n(f)));
    return out;
  }();
  return reports;
}

std::string tag(FamilyKind f, int n) { return to_string(f) + " n=" + std::to_string(n); }

void ac1(Outcome& o) {
  struct Example {
    FamilyKind f;
    int n;
    std::uint64_t w;
  };
  const Example examples[] = {{FamilyKind::cscom_dihedral, 3, 21},   {FamilyKind::cscom_dihedral, 4, 40},
                              {FamilyKind::cscom_dihedral, 6, 90},   {FamilyKind::escom_dihedral, 3, 24},
                              {FamilyKind::escom_quaternion, 2, 40}, {FamilyKind::cscom_quaternion, 2, 40},
                              {FamilyKind::cscom_quaternion, 3, 90}};
  for (const auto& e : examples) {
    auto w = wiener_index(family_graph(e.f, make_group(family_group(e.f, e.n))));
    o.check(w == e.w && wiener_closed_form(e.f, e.n) == e.w, "example " + tag(e.f, e.n));
  }
  int checked = 0;
  for (auto f : kFamilies)
    for (int n = family_min_n(f); n <= family_max_n(f); ++n) {
      ++checked;
      auto bfs = wiener_index(family_graph(f, make_group(family_group(f, n))));
      auto closed = wiener_closed_form(f, n);
      o.check(bfs == closed, tag(f, n) + " bfs=" + std::to_string(bfs) + " formula=" + std::to_string(closed));
    }
  o.detail << " [" << checked << " graphs, " << o.failures << " mismatches]";
}

void ac2(Outcome& o) {
  int checked = 0;
  for (const auto& rep : family_reports())
    for (const auto& r : rep.records) {
      ++checked;
      Graph expr = eval_expr(structure_expr(rep.family, r.n));
      Graph actual = family_graph(rep.family, make_group(family_group(rep.family, r.n)));
      std::vector<Vertex> w(r.witness.begin(), r.witness.end());
      o.check(r.isomorphic && is_isomorphism(expr, actual, w), tag(rep.family, r.n) + " (" + r.case_name + ")");
    }
  o.detail << " [" << checked << " witnesses]";
}

void ac3(Outcome& o) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 6;
    Graph base = Graph::empty(k);
    for (Vertex v = 1; v < k; ++v) base.add_edge(rng() % v, v);  // random tree keeps it connected
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v)
        if (rng() % 3 == 0 && !base.has_edge(u, v)) base.add_edge(u, v);
    std::vector<std::size_t> sizes;
    std::vector<FactorKind> kinds;
    std::vector<Graph> complete_factors;
    for (std::size_t i = 0; i < k; ++i) {
      sizes.push_back(1 + rng() % 4);
      kinds.push_back(k > 1 && rng() % 2 ? FactorKind::empty : FactorKind::complete);
      complete_factors.push_back(Graph::complete(sizes.back()));
    }
    auto w = CompositionWitness::make(base, sizes, kinds);
    o.check(wiener_via_composition(w) == wiener_index(w.evaluate()), "random composition " + std::to_string(t));
    o.check(wiener_supergraph_formula(base, sizes) == wiener_index(compose(base, complete_factors)),
            "random supergraph " + std::to_string(t));
  }
  int checked = 0;
  for (const auto& rep : family_reports())
    for (const auto& r : rep.records) {
      ++checked;
      o.check(r.wiener_bfs == r.wiener_composition && r.wiener_bfs == r.wiener_formula, tag(rep.family, r.n));
    }
  o.detail << " [100 random, " << checked << " quotients]";
}

void ac4(Outcome& o) {
  for (const auto& spec : default_catalog()) {
    auto r = hierarchy_report(make_group(spec));
    for (const auto& c : r.containments) o.check(c.holds, r.group + " " + c.description);
    o.check(r.order_coincidence, r.group + " order coincidence");
  }
}

void ac5(Outcome& o) {
  const std::vector<GroupSpec> groups{GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::symmetric(3),
                                      GroupSpec::dihedral(4), GroupSpec::quaternion(2)};
  int checked = 0;
  for (const auto& a : groups)
    for (const auto& b : groups)
      for (auto k : {AdjacencyKind::commuting, AdjacencyKind::nilpotent, AdjacencyKind::solvable}) {
        ++checked;
        o.check(strong_product_identity_check(a, b, k).holds, a.label() + "x" + b.label() + " " + to_string(k));
      }
  o.detail << " [" << checked << " products]";
}

void ac6(Outcome& o) {
  // (a) K3 - e on 2-, 3-, 5-cycles of S7.
  const std::vector<Edge> k3e{{0, 1}, {0, 2}};
  for (auto kind : {AdjacencyKind::commuting, AdjacencyKind::nilpotent, AdjacencyKind::solvable,
                    AdjacencyKind::enhanced}) {
    auto r = step3_embedding(3, kind, true);
    o.check(r.degree == 7 && r.graph.edges() == k3e, "n=3 " + to_string(kind));
  }
  ClassAdjacencyOptions full;
  full.exhaustive = true;
  for (auto kind : {AdjacencyKind::nilpotent, AdjacencyKind::solvable}) {
    auto r = class_adjacency(7, 3, 5, kind, full);
    std::size_t closed = 0;
    for (const auto& [order, count] : r.generated_orders) closed += count;
    o.check(!r.adjacent && r.examined == r.candidates && closed + r.commuting_candidates == r.candidates,
            "(3,5) closure " + to_string(kind));
  }
  // (b) K4 - e on 2-, 3-, 5-, 7-cycles of S11.
  auto c = step3_embedding(4, AdjacencyKind::commuting, true);
  const std::vector<Edge> k4e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  o.check(c.degree == 11 && c.graph.edges() == k4e, "n=4 commuting");
  std::size_t scanned = 0;
  for (const auto& p : c.pairs) scanned = std::max(scanned, p.candidates);
  auto s = class_adjacency(11, 5, 7, AdjacencyKind::solvable);
  o.check(!s.adjacent && s.method.find("order-certificate") != std::string::npos, "n=4 solvable (5,7) certificate");
  // (c) end-to-end embeddings.
  for (const auto& [name, g] : {std::pair{"P3", Graph::path(3)}, std::pair{"C4", Graph::cycle(4)}}) {
    auto cert = embed_graph(g, AdjacencyKind::commuting);
    o.check(cert.verified && cert.diagonal_checked && cert.diagonal_matches, std::string("embed ") + name);
  }
  o.detail << " [largest scanned class " << scanned << "]";
}

void ac7(Outcome& o) {
  for (const auto& spec : default_catalog()) {
    FiniteGroup g = make_group(spec);
    o.check(is_comparability(build_base_graph(g, AdjacencyKind::power)), spec.label() + " power");
    o.check(is_comparability(build_supergraph(g, AdjacencyKind::power, PartitionKind::conjugacy)),
            spec.label() + " conjugacy superpower");
  }
  o.check(!is_comparability(Graph::cycle(5)), "C5 negative control");
}

void ac8(Outcome& o) {
  std::size_t applicable = 0;
  bool s3_equal = false;
  for (const auto& spec : default_catalog(true)) {
    FiniteGroup g = make_group(spec);
    for (const auto& c : containment_checks(g)) {
      if (!c.applicable) continue;
      ++applicable;
      o.check(c.contained && c.violations.empty(),
              g.label() + " " + to_string(c.kind) + " " + c.relation);
      if (g.label() == "S3" && c.kind == PropertyKind::abelian && c.relation == "generating") s3_equal = c.equal;
    }
  }
  o.check(s3_equal, "S3 generating graph equals the non-commuting graph");
  auto scan = equality_scan(default_catalog(true));
  o.check(std::find(scan.equality.begin(), scan.equality.end(), "S3:abelian") != scan.equality.end(),
          "equality_scan reports S3");
  o.check(scan.containments_hold, "equality_scan containments");
  o.detail << " [" << applicable << " applicable checks]";
}

void ac9(Outcome& o) {
  auto catalog = default_catalog(true);
  catalog.push_back(GroupSpec::dihedral(6));
  catalog.push_back(GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(2)));
  for (const auto& spec : catalog) {
    FiniteGroup g = make_group(spec);
    const std::string name = spec.label();
    try {
      g.check_axioms();
    } catch (const Error&) {
      o.check(false, name + " axioms");
    }
    for (const auto& c : conjugacy_classes(g))
      o.check(c.members.size() * centralizer(g, c.representative).size() == g.size(), name + " orbit-stabilizer");
    for (Element x = 0; x < g.size(); x += 3)
      for (Element y = x; y < g.size(); y += 5) {
        auto f = classify_subgroup(generated_subgroup(g, {x, y}));
        o.check((!f.is_cyclic || f.is_abelian) && (!f.is_abelian || f.is_nilpotent) &&
                    (!f.is_nilpotent || f.is_solvable),
                name + " classify monotone");
      }
    if (g.size() <= 24)
      for (auto kind : kAdjacencyKinds)
        for (auto pkind : kPartitionKinds)
          o.check(build_supergraph(g, kind, pkind, ScanMode::restricted) ==
                      build_supergraph(g, kind, pkind, ScanMode::full),
                  name + " restricted scan " + to_string(pkind) + "/" + to_string(kind));
  }
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const std::size_t na = 1 + rng() % 5, nb = 1 + rng() % 5;
    Graph a = Graph::empty(na), b = Graph::empty(nb);
    for (Vertex u = 0; u < na; ++u)
      for (Vertex v = u + 1; v < na; ++v)
        if (rng() % 2) a.add_edge(u, v);
    for (Vertex u = 0; u < nb; ++u)
      for (Vertex v = u + 1; v < nb; ++v)
        if (rng() % 2) b.add_edge(u, v);
    o.check(join(a, b).edges() == compose(Graph::complete(2), {a, b}).edges(), "join = K2 composition");
    Graph s = strong_product(a, a);
    std::vector<Vertex> diag;
    for (Vertex v = 0; v < na; ++v) diag.push_back(v * (na + 1));
    o.check(induced_subgraph_ordered(s, diag).edges() == a.edges(), "strong product diagonal");
    o.check(s.edge_count() == 2 * na * a.edge_count() + 2 * a.edge_count() * a.edge_count(),
            "strong product edge count");
    o.check(is_isomorphic(strong_product(a, b), strong_product(b, a)), "strong product commutes");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Wiener closed forms equal BFS", 5, ac1},
      {"AC2", "structure isomorphisms with witnesses", 10, ac2},
      {"AC3", "composition Wiener formulas agree with BFS", 0, ac3},
      {"AC4", "hierarchy containments and order coincidence", 0, ac4},
      {"AC5", "strong-product identity", 30, ac5},
      {"AC6", "universality constructions", 120, ac6},
      {"AC7", "power graphs are comparability graphs", 0, ac7},
      {"AC8", "invariable-generation containments", 60, ac8},
      {"AC9", "property suites", 0, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) o.check(false, "over runtime budget");
    if (!o.pass) ++failed;
    std::printf("%s %s  %s (%.2fs)%s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", c.title.c_str(), secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
