#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "supergraphs/closed_forms.hpp"
#include "supergraphs/distance.hpp"
#include "supergraphs/dot.hpp"
#include "supergraphs/error.hpp"
#include "supergraphs/invariable.hpp"
#include "supergraphs/json_io.hpp"
#include "supergraphs/supergraph.hpp"
#include "supergraphs/universality.hpp"

namespace supergraphs::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// Inline JSON, or @path to read it from a file.
std::string inline_or_file(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
    if (a > b) throw UsageError("empty range '" + s + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "', expected a..b");
  }
}

std::vector<GroupSpec> load_catalog(const std::string& name, bool default_a5) {
  if (name == "default") return default_catalog(default_a5);
  if (name == "extended") return default_catalog(true);
  if (name == "strong-product")
    return {GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::symmetric(3), GroupSpec::dihedral(4),
            GroupSpec::quaternion(2)};
  json j = parse_json(inline_or_file(name[0] == '@' ? name : "@" + name), "catalog");
  if (!j.is_array()) throw UsageError("catalog must be a JSON array of group specs");
  std::vector<GroupSpec> out;
  for (const auto& s : j) out.push_back(s.get<GroupSpec>());
  return out;
}

/// Output of every report-producing command.
struct RunReport {
  std::string command;
  json records = json::array();
  bool pass = true;
  double seconds = 0;

  void add(json record, bool ok) {
    record["pass"] = ok;
    records.push_back(std::move(record));
    pass = pass && ok;
  }
  json to_json(bool timing) const {
    json j = {{"command", command}, {"records", records}, {"verdict", pass ? "pass" : "fail"}};
    if (timing) j["timing"] = {{"seconds", seconds}};
    return j;
  }
};

void print_table(std::ostream& out, const RunReport& r) {
  out << r.command << "\n";
  for (const auto& rec : r.records) {
    out << (rec.value("pass", false) ? "  PASS " : "  FAIL ");
    bool first = true;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (it.key() == "pass" || it->is_structured()) continue;
      out << (first ? "" : "  ") << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump());
      first = false;
    }
    out << "\n";
  }
  out << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
}

struct Options {
  // graph / igg / wiener
  std::string group;
  std::string kind = "commuting";
  std::string partition = "conjugacy";
  bool compressed = false, quotient = false;
  std::string json_out, dot_out;
  // verify / wiener
  std::string suite, family, range, catalog = "default";
  std::string sp_kind = "all";
  bool table = false, timing = false;
  // embed
  std::string graph_file, out_file;
  bool allow_arithmetic = false;
  // igg
  bool check = false, full_scan = false;
};

int emit_report(std::ostream& out, const Options& o, const RunReport& r) {
  if (o.table) print_table(out, r);
  else out << r.to_json(o.timing).dump(2) << "\n";
  if (!o.out_file.empty()) write_file(o.out_file, r.to_json(o.timing).dump(2) + "\n");
  return r.pass ? kExitPass : kExitFail;
}

FiniteGroup load_group(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  return make_group(parse_json(inline_or_file(o.group), "group spec").get<GroupSpec>());
}

int cmd_graph(const Options& o, std::ostream& out) {
  if (o.compressed && o.quotient) throw UsageError("--compressed and --quotient are exclusive");
  FiniteGroup g = load_group(o);
  const AdjacencyKind kind = parse_adjacency_kind(o.kind);
  const PartitionKind pkind = parse_partition_kind(o.partition);
  Graph result;
  json doc;
  json sidecar;
  if (o.compressed) {
    result = build_compressed(g, kind);
    doc = result;
  } else if (o.quotient) {
    auto q = quotient_supergraph(g, kind, pkind);
    result = q.delta;
    std::vector<std::string> names;
    for (Element x : q.witness) names.push_back(g.name(x));
    sidecar = {{"sizes", q.sizes}, {"witness", names}};
    doc = {{"delta", q.delta}, {"sizes", q.sizes}, {"witness", names}};
  } else {
    result = build_supergraph(g, kind, pkind);
    doc = result;
  }
  const std::string name = g.label() + " " + to_string(pkind) + " super" + to_string(kind);
  if (o.json_out.empty() && o.dot_out.empty()) out << doc.dump(2) << "\n";
  if (!o.json_out.empty()) {
    if (o.quotient) {
      write_file(o.json_out, json(result).dump(2) + "\n");
      auto stem = o.json_out.substr(0, o.json_out.rfind(".json") == std::string::npos ? o.json_out.size()
                                                                                        : o.json_out.rfind(".json"));
      write_file(stem + ".sizes.json", sidecar.dump(2) + "\n");
    } else {
      write_file(o.json_out, doc.dump(2) + "\n");
    }
  }
  if (!o.dot_out.empty()) {
    if (o.dot_out == "-") out << to_dot(result, name);
    else write_file(o.dot_out, to_dot(result, name));
  }
  return kExitPass;
}

int cmd_verify(const Options& o, RunReport& r) {
  const std::string& s = o.suite;
  if (s == "structure" || s == "wiener") {
    if (o.family.empty()) throw UsageError("--family is required for the " + s + " suite");
    const FamilyKind f = parse_family(o.family);
    auto [a, b] = o.range.empty() ? std::pair(family_min_n(f), family_min_n(f) + 9) : parse_range(o.range);
    for (const auto& rec : verify_family(f, a, b).records) {
      json j = rec;
      j.erase("pass");
      if (s == "structure") {
        j["expr"] = structure_expr(f, rec.n).to_string();
        r.add(j, rec.isomorphic);
      } else {
        r.add(j, rec.wiener_bfs == rec.wiener_closed && rec.wiener_bfs == rec.wiener_formula &&
                     rec.wiener_bfs == rec.wiener_composition);
      }
    }
  } else if (s == "hierarchy") {
    for (const auto& spec : load_catalog(o.catalog, false)) {
      auto h = hierarchy_report(make_group(spec));
      json j = h;
      j.erase("pass");
      r.add(j, h.ok());
    }
  } else if (s == "strong-product") {
    auto cat = load_catalog(o.catalog == "default" ? "strong-product" : o.catalog, false);
    std::vector<AdjacencyKind> kinds{AdjacencyKind::commuting, AdjacencyKind::nilpotent, AdjacencyKind::solvable};
    if (o.sp_kind != "all") kinds = {parse_adjacency_kind(o.sp_kind)};
    for (const auto& a : cat)
      for (const auto& b : cat)
        for (auto k : kinds) {
          auto c = strong_product_identity_check(a, b, k);
          r.add({{"left", a.label()}, {"right", b.label()}, {"kind", to_string(k)},
                 {"classes", c.direct.size()}, {"edges", c.direct.edge_count()}},
                c.holds);
        }
  } else if (s == "containment") {
    for (const auto& spec : load_catalog(o.catalog, true)) {
      for (const auto& c : containment_checks(make_group(spec))) {
        json j = c;
        r.add(j, !c.applicable || c.contained);
      }
    }
  } else {
    throw UsageError("unknown suite '" + s + "'");
  }
  return r.pass ? kExitPass : kExitFail;
}

int cmd_embed(const Options& o, std::ostream& out) {
  Graph target = parse_json(read_file(o.graph_file), "graph").get<Graph>();
  const AdjacencyKind kind = parse_adjacency_kind(o.kind);
  EmbedOptions opts;
  auto run = [&](bool arithmetic) {
    opts.allow_arithmetic_only = arithmetic;
    return kind == AdjacencyKind::enhanced ? enhanced_embed(target, opts) : embed_graph(target, kind, opts);
  };
  EmbeddingCertificate cert;
  bool downgraded = false;
  try {
    cert = run(o.allow_arithmetic);
  } catch (const CapExceeded&) {
    cert = run(true);
    downgraded = true;
  }
  json j = cert;
  j["downgraded"] = downgraded;
  if (o.out_file.empty()) out << j.dump(2) << "\n";
  else write_file(o.out_file, j.dump(2) + "\n");
  if (downgraded) return kExitCap;
  return cert.verified ? kExitPass : kExitFail;
}

int cmd_igg(const Options& o, std::ostream& out) {
  FiniteGroup g = load_group(o);
  Graph igg = invariable_generating_graph(g, o.full_scan ? ScanMode::full : ScanMode::restricted);
  json j = {{"group", g.label()}, {"graph", igg}};
  bool ok = true;
  if (o.check) {
    auto checks = containment_checks(g);
    for (const auto& c : checks) ok = ok && (!c.applicable || c.contained);
    j["containment"] = checks;
    j["verdict"] = ok ? "pass" : "fail";
  }
  out << j.dump(2) << "\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_scan(const Options& o, std::ostream& out) {
  auto report = equality_scan(load_catalog(o.catalog, true));
  json j = report;
  if (o.out_file.empty()) out << j.dump(2) << "\n";
  else write_file(o.out_file, j.dump(2) + "\n");
  return report.containments_hold ? kExitPass : kExitFail;
}

int cmd_wiener(const Options& o, RunReport& r) {
  if (!o.family.empty()) {
    const FamilyKind f = parse_family(o.family);
    auto [a, b] = o.range.empty() ? std::pair(family_min_n(f), family_min_n(f)) : parse_range(o.range);
    for (int n = a; n <= b; ++n) {
      FiniteGroup g = make_group(family_group(f, n));
      auto bfs = wiener_index(family_graph(f, g));
      auto closed = wiener_closed_form(f, n);
      r.add({{"n", n}, {"case", family_case(f, n)}, {"wiener_bfs", bfs}, {"wiener_closed", closed},
             {"wiener_class_count", wiener_class_count_form(f, n)}},
            bfs == closed);
    }
    return r.pass ? kExitPass : kExitFail;
  }
  FiniteGroup g = load_group(o);
  const AdjacencyKind kind = parse_adjacency_kind(o.kind);
  const PartitionKind pkind = parse_partition_kind(o.partition);
  auto bfs = wiener_index(build_supergraph(g, kind, pkind));
  auto q = quotient_supergraph(g, kind, pkind);
  auto formula = wiener_supergraph_formula(q.delta, q.sizes);
  r.add({{"group", g.label()}, {"kind", to_string(kind)}, {"partition", to_string(pkind)}, {"wiener_bfs", bfs},
         {"wiener_formula", formula}},
        bfs == formula);
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supergraphs on finite groups: construction, verification and universality embeddings", "supergraph"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "Build a B super-A graph (or its compressed / quotient form)");
  graph->add_option("--group", o.group, "Group spec as JSON, or @file")->required();
  graph->add_option("--kind", o.kind, "power|enhanced|commuting|nilpotent|solvable");
  graph->add_option("--partition", o.partition, "equality|conjugacy|order");
  graph->add_flag("--compressed", o.compressed, "One vertex per conjugacy class");
  graph->add_flag("--quotient", o.quotient, "Quotient graph plus class sizes");
  graph->add_option("--json", o.json_out, "Write graph JSON to this file");
  graph->add_option("--dot", o.dot_out, "Write DOT to this file ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "structure|wiener|hierarchy|strong-product|containment")->required();
  verify->add_option("--family", o.family, "escom-d|escom-q|cscom-d|cscom-q");
  verify->add_option("--n", o.range, "Parameter range a..b");
  verify->add_option("--catalog", o.catalog, "default|extended|<file with a JSON array of specs>");
  verify->add_option("--kind", o.sp_kind, "Adjacency kind for strong-product (default: all three)");
  verify->add_option("--out", o.out_file, "Also write the report to this file");
  verify->add_flag("--table", o.table, "Human-readable table instead of JSON");
  verify->add_flag("--timing", o.timing, "Include wall-clock timing in the report");

  auto* embed = app.add_subcommand("embed", "Embed a graph as an induced compressed supergraph of symmetric groups");
  embed->add_option("--graph", o.graph_file, "Target graph JSON file")->required();
  embed->add_option("--kind", o.kind, "commuting|nilpotent|solvable|enhanced");
  embed->add_option("--out", o.out_file, "Certificate output file");
  embed->add_flag("--allow-arithmetic", o.allow_arithmetic, "Decide above-cap factors arithmetically");

  auto* igg = app.add_subcommand("igg", "Invariable generating graph");
  igg->add_option("--group", o.group, "Group spec as JSON, or @file")->required();
  igg->add_flag("--check", o.check, "Also run the containment checks");
  igg->add_flag("--full-scan", o.full_scan, "Scan both conjugacy classes instead of fixing one element");

  auto* scan = app.add_subcommand("scan", "Scan a catalog for invariable-generation equality");
  scan->add_option("--catalog", o.catalog, "default|extended|<file>");
  scan->add_option("--out", o.out_file, "Report output file");

  auto* wiener = app.add_subcommand("wiener", "Wiener index of a supergraph or a family");
  wiener->add_option("--group", o.group, "Group spec as JSON, or @file");
  wiener->add_option("--kind", o.kind, "Adjacency kind");
  wiener->add_option("--partition", o.partition, "Partition");
  wiener->add_option("--family", o.family, "escom-d|escom-q|cscom-d|cscom-q");
  wiener->add_option("--n", o.range, "Parameter range a..b");
  wiener->add_flag("--table", o.table, "Human-readable table instead of JSON");
  wiener->add_flag("--timing", o.timing, "Include wall-clock timing");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  RunReport report;
  for (std::size_t i = 1; i < args.size(); ++i) report.command += (i > 1 ? " " : "") + args[i];
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (*graph) return cmd_graph(o, out);
    if (*embed) return cmd_embed(o, out);
    if (*igg) return cmd_igg(o, out);
    if (*scan) return cmd_scan(o, out);
    int code = *verify ? cmd_verify(o, report) : cmd_wiener(o, report);
    report.seconds = elapsed();
    emit_report(out, o, report);
    return code;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace supergraphs::cli
