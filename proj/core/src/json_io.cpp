#include "supergraphs/json_io.hpp"

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

const char* kind_name(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::cyclic: return "cyclic";
    case GroupSpec::Kind::dihedral: return "dihedral";
    case GroupSpec::Kind::quaternion: return "quaternion";
    case GroupSpec::Kind::symmetric: return "symmetric";
    case GroupSpec::Kind::alternating: return "alternating";
    case GroupSpec::Kind::product: return "product";
    case GroupSpec::Kind::table: return "table";
    case GroupSpec::Kind::permgens: return "permgens";
  }
  return "?";
}

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

void to_json(json& j, const GroupSpec& s) {
  j = json::object();
  j["kind"] = kind_name(s.kind);
  switch (s.kind) {
    case GroupSpec::Kind::product:
      j["of"] = s.factors;
      break;
    case GroupSpec::Kind::table:
      j["rows"] = s.rows;
      break;
    case GroupSpec::Kind::permgens:
      j["degree"] = s.n;
      j["gens"] = s.generators;
      break;
    default:
      j["n"] = s.n;
  }
}

void from_json(const json& j, GroupSpec& s) {
  try {
    if (!j.is_object()) throw InvalidSpec("group spec must be a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") s = GroupSpec::cyclic(j.at("n").get<int>());
    else if (kind == "dihedral") s = GroupSpec::dihedral(j.at("n").get<int>());
    else if (kind == "quaternion") s = GroupSpec::quaternion(j.at("n").get<int>());
    else if (kind == "symmetric") s = GroupSpec::symmetric(j.at("n").get<int>());
    else if (kind == "alternating") s = GroupSpec::alternating(j.at("n").get<int>());
    else if (kind == "product") {
      const auto& of = j.at("of");
      if (!of.is_array() || of.size() != 2) throw InvalidSpec("product needs exactly two factors in \"of\"");
      s = GroupSpec::product(of[0].get<GroupSpec>(), of[1].get<GroupSpec>());
    } else if (kind == "table") {
      s = GroupSpec::table(j.at("rows").get<std::vector<std::vector<std::size_t>>>());
    } else if (kind == "permgens") {
      s = GroupSpec::permgens(j.at("degree").get<int>(),
                              j.at("gens").get<std::vector<std::vector<std::vector<int>>>>());
    } else {
      throw InvalidSpec("unknown group kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed group spec: ") + e.what());
  }
}

GroupSpec parse_group_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("group spec is not valid JSON: ") + e.what());
  }
  return j.get<GroupSpec>();
}

void to_json(json& j, const Graph& g) {
  j = json::object();
  j["labels"] = g.labels();
  j["edges"] = edge_list(g.edges());
}

void from_json(const json& j, Graph& g) {
  try {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be a pair [i, j]");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    g = Graph::from_edges(std::move(labels), edges);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
}

void to_json(json& j, const GraphExpr& e) {
  j = json::object();
  switch (e.kind()) {
    case GraphExpr::Kind::complete:
      j["complete"] = e.leaf_size();
      break;
    case GraphExpr::Kind::empty:
      j["empty"] = e.leaf_size();
      break;
    case GraphExpr::Kind::join:
      j["join"] = e.children();
      break;
    case GraphExpr::Kind::disjoint_union:
      j["union"] = e.children();
      break;
    case GraphExpr::Kind::composition: {
      const auto& c = e.children();
      j["composition"] = {{"base", c.front()}, {"factors", std::vector<GraphExpr>(c.begin() + 1, c.end())}};
      break;
    }
  }
}

GraphExpr expr_from_json(const json& j) {
  try {
    if (j.contains("complete")) return GraphExpr::complete(j["complete"].get<std::size_t>());
    if (j.contains("empty")) return GraphExpr::empty(j["empty"].get<std::size_t>());
    auto list = [](const json& arr) {
      std::vector<GraphExpr> out;
      for (const auto& x : arr) out.push_back(expr_from_json(x));
      return out;
    };
    if (j.contains("join")) {
      const auto& c = j["join"];
      if (c.size() != 2) throw InvalidArgument("join takes two operands");
      return GraphExpr::join(expr_from_json(c[0]), expr_from_json(c[1]));
    }
    if (j.contains("union")) return GraphExpr::disjoint_union(list(j["union"]));
    if (j.contains("composition")) {
      const auto& c = j["composition"];
      return GraphExpr::composition(expr_from_json(c.at("base")), list(c.at("factors")));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed expression JSON: ") + ex.what());
  }
  throw InvalidArgument("unknown graph expression node");
}

void to_json(json& j, const QuotientDecomposition& q) {
  j = json::object();
  j["delta"] = q.delta;
  j["sizes"] = q.sizes;
  j["witness"] = q.witness;
}

void to_json(json& j, const HierarchyReport& r) {
  j = json::object();
  j["group"] = r.group;
  json checks = json::array();
  for (const auto& c : r.containments) checks.push_back({{"check", c.description}, {"holds", c.holds}});
  j["containments"] = checks;
  j["order_coincidence"] = r.order_coincidence;
  json counts = json::object();
  for (std::size_t b = 0; b < 3; ++b) {
    json row = json::object();
    for (std::size_t a = 0; a < 5; ++a) row[to_string(kAdjacencyKinds[a])] = r.edge_counts[b][a];
    counts[to_string(kPartitionKinds[b])] = row;
  }
  j["edge_counts"] = counts;
  j["pass"] = r.ok();
}

void to_json(json& j, const FamilyRecord& r) {
  j = json::object();
  j["n"] = r.n;
  j["case"] = r.case_name;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["wiener_bfs"] = r.wiener_bfs;
  j["wiener_composition"] = r.wiener_composition;
  j["wiener_formula"] = r.wiener_formula;
  j["wiener_closed"] = r.wiener_closed;
  j["isomorphic"] = r.isomorphic;
  j["pass"] = r.pass;
}

void to_json(json& j, const FamilyReport& r) {
  j = json::object();
  j["family"] = to_string(r.family);
  j["records"] = r.records;
  j["pass"] = r.pass();
}

void to_json(json& j, const ClassAdjacency& a) {
  j = json::object();
  j["degree"] = a.degree;
  j["p"] = a.p;
  j["q"] = a.q;
  j["kind"] = to_string(a.kind);
  j["adjacent"] = a.adjacent;
  j["method"] = a.method;
  j["candidates"] = a.candidates;
  j["examined"] = a.examined;
  if (!a.generated_orders.empty()) j["generated_orders"] = a.generated_orders;
  if (a.witness) j["witness"] = a.witness->to_string();
}

void to_json(json& j, const Step3Result& s) {
  j = json::object();
  j["n"] = s.n;
  j["degree"] = s.degree;
  j["primes"] = s.primes;
  j["with_nonedge"] = s.with_nonedge;
  j["arithmetic_only"] = s.arithmetic_only;
  j["graph"] = s.graph;
  j["pairs"] = s.pairs;
}

void to_json(json& j, const EmbeddingCertificate& c) {
  j = json::object();
  j["kind"] = to_string(c.kind);
  j["target"] = c.target;
  json factors = json::array();
  for (const auto& f : c.factors) {
    json jf = json::object();
    jf["nonedge"] = f.nonedge ? json{f.nonedge->first, f.nonedge->second} : json(nullptr);
    jf["primes"] = f.primes;
    jf["degree"] = f.degree;
    jf["vertex_primes"] = f.vertex_primes;
    jf["method"] = f.method;
    jf["arithmetic_only"] = f.arithmetic_only;
    json matrix = json::array();
    for (Vertex u = 0; u < f.factor_graph.size(); ++u) {
      json row = json::array();
      for (Vertex v = 0; v < f.factor_graph.size(); ++v) row.push_back(f.factor_graph.has_edge(u, v) ? 1 : 0);
      matrix.push_back(row);
    }
    jf["adjacency"] = matrix;
    factors.push_back(jf);
  }
  j["factors"] = factors;
  j["final_graph"] = c.final_graph;
  j["witness"] = c.witness;
  j["diagonal_checked"] = c.diagonal_checked;
  j["diagonal_matches"] = c.diagonal_matches;
  if (c.kind == AdjacencyKind::enhanced) j["coprime_check"] = c.coprime_check;
  j["arithmetic_only"] = c.arithmetic_only;
  j["verified"] = c.verified;
}

void to_json(json& j, const StrongProductCheck& c) {
  j = json::object();
  j["direct"] = c.direct;
  j["product"] = c.product;
  j["witness"] = c.witness;
  j["holds"] = c.holds;
}

void to_json(json& j, const ContainmentReport& r) {
  j = json::object();
  j["group"] = r.group;
  j["kind"] = to_string(r.kind);
  j["relation"] = r.relation;
  j["applicable"] = r.applicable;
  if (!r.note.empty()) j["note"] = r.note;
  j["contained"] = r.contained;
  j["equal"] = r.equal;
  j["violations"] = edge_list(r.violations);
}

void to_json(json& j, const EqualityScanReport& r) {
  j = json::object();
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"group", row.group}, {"kind", to_string(row.kind)}, {"applicable", row.applicable},
               {"equal", row.equal}};
    if (!row.note.empty()) jr["note"] = row.note;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["equality"] = r.equality;
  j["containments_hold"] = r.containments_hold;
}

}  // namespace supergraphs
