#include "supergraphs/universality.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "supergraphs/error.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/schreier_sims.hpp"

namespace supergraphs {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

struct PermGroup {
  std::vector<Permutation> gens;
  PermSet members;
};

PermGroup close(std::size_t degree, std::vector<Permutation> gens, std::uint64_t limit) {
  PermGroup g;
  g.gens = std::move(gens);
  std::vector<Permutation> queue{Permutation(degree)};
  g.members.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : g.gens) {
      Permutation p = queue[k] * s;
      if (g.members.insert(p).second) {
        if (g.members.size() > limit)
          throw CapExceeded("permutation group closure exceeds " + std::to_string(limit) + " elements");
        queue.push_back(std::move(p));
      }
    }
  }
  return g;
}

// Smallest subgroup containing `seeds` and normalised by <ambient>.
PermGroup normal_closure(std::size_t degree, const std::vector<Permutation>& ambient,
                         const std::vector<Permutation>& seeds, std::uint64_t limit) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  PermGroup k = close(degree, gens, limit);
  for (std::size_t i = 0; i < k.gens.size(); ++i) {
    for (const auto& y : ambient) {
      Permutation c = k.gens[i].conjugate_by(y);
      if (!k.members.count(c)) {
        auto next = k.gens;
        next.push_back(std::move(c));
        k = close(degree, std::move(next), limit);
      }
    }
  }
  return k;
}

std::vector<Permutation> commutators(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  std::vector<Permutation> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(commutator(x, y));
  return out;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// All cycles of the given length on {0..degree-1}, each listed from its minimum.
void enumerate_cycles(std::size_t degree, std::size_t length, std::vector<Permutation::Point>& current,
                      std::vector<bool>& used, std::vector<Permutation>& out) {
  if (current.size() == length) {
    out.push_back(Permutation::cycle(degree, current));
    return;
  }
  const auto lo = current.empty() ? 0 : current.front() + 1;
  for (auto x = static_cast<Permutation::Point>(lo); x < degree; ++x) {
    if (used[x]) continue;
    used[x] = true;
    current.push_back(x);
    enumerate_cycles(degree, length, current, used, out);
    current.pop_back();
    used[x] = false;
  }
}

bool commuting_pair_cyclic(const Permutation& x, const Permutation& y) {
  // <x, y> = { x^i y^j } for commuting x, y.
  PermSet elems;
  const auto ox = x.order(), oy = y.order();
  Permutation xi(x.degree());
  for (std::uint64_t i = 0; i < ox; ++i, xi = xi * x) {
    Permutation e = xi;
    for (std::uint64_t j = 0; j < oy; ++j, e = e * y) elems.insert(e);
  }
  return std::any_of(elems.begin(), elems.end(), [&](const Permutation& g) { return g.order() == elems.size(); });
}

std::size_t support_union(const Permutation& x, const Permutation& y) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < x.degree(); ++i) s += (x[i] != i || y[i] != i);
  return s;
}

void add_method(std::string& methods, const std::string& m) {
  if (methods.empty()) {
    methods = m;
    return;
  }
  std::size_t pos = 0;
  while (pos <= methods.size()) {
    auto end = methods.find('+', pos);
    if (end == std::string::npos) end = methods.size();
    if (methods.compare(pos, end - pos, m) == 0) return;
    pos = end + 1;
  }
  methods += "+" + m;
}

void require_scan_kind(AdjacencyKind kind) {
  if (kind == AdjacencyKind::power)
    throw InvalidArgument("class adjacency supports commuting, enhanced, nilpotent and solvable kinds");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_first(std::size_t n) {
  if (n < 1) throw InvalidArgument("primes_first needs n >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; out.size() < n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

PermGroupFacts perm_group_facts(std::size_t degree, const std::vector<Permutation>& gens, std::uint64_t limit) {
  PermGroup h = close(degree, gens, limit);
  PermGroupFacts f;
  f.order = h.members.size();
  PermGroup d = h;
  while (d.members.size() > 1) {
    PermGroup next = normal_closure(degree, h.gens, commutators(d.gens, d.gens), limit);
    if (next.members.size() == d.members.size()) break;
    d = std::move(next);
  }
  f.solvable = d.members.size() == 1;
  PermGroup c = h;
  while (c.members.size() > 1) {
    PermGroup next = normal_closure(degree, h.gens, commutators(c.gens, h.gens), limit);
    if (next.members.size() == c.members.size()) break;
    c = std::move(next);
  }
  f.nilpotent = c.members.size() == 1;
  return f;
}

ClassAdjacency class_adjacency(std::size_t degree, std::uint64_t p, std::uint64_t q, AdjacencyKind kind,
                               ClassAdjacencyOptions options) {
  require_scan_kind(kind);
  if (degree > kMaxSymmetricDegree)
    throw CapExceeded("symmetric degree " + std::to_string(degree) + " exceeds the scan cap of " +
                      std::to_string(kMaxSymmetricDegree));
  if (!is_prime(p) || !is_prime(q) || p == q) throw InvalidArgument("class adjacency needs two distinct primes");
  if (p > degree || q > degree) throw InvalidArgument("cycle length exceeds the degree");

  ClassAdjacency r;
  r.degree = degree;
  r.p = p;
  r.q = q;
  r.kind = kind;
  const auto longer = std::max(p, q), shorter = std::min(p, q);
  const auto fixed_len = options.fix_longer ? longer : shorter;
  const auto scan_len = options.fix_longer ? shorter : longer;

  std::vector<Permutation::Point> pts(fixed_len);
  std::iota(pts.begin(), pts.end(), Permutation::Point{0});
  const Permutation x = Permutation::cycle(degree, pts);
  r.fixed = x;

  std::vector<Permutation> ys;
  std::vector<Permutation::Point> cur;
  std::vector<bool> used(degree, false);
  enumerate_cycles(degree, scan_len, cur, used, ys);
  r.candidates = ys.size();

  // Commutation is cheap, so every candidate is tested for it first.
  std::vector<bool> commutes(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    commutes[i] = x * ys[i] == ys[i] * x;
    r.commuting_candidates += commutes[i];
  }
  r.method = "scan";

  auto found = [&](std::size_t i) {
    if (!r.adjacent) r.witness = ys[i];
    r.adjacent = true;
  };

  switch (kind) {
    case AdjacencyKind::commuting:
      r.examined = ys.size();
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (commutes[i]) {
          found(i);
          break;
        }
      break;
    case AdjacencyKind::enhanced:
      // A non-commuting pair generates a non-abelian, hence non-cyclic, group.
      for (std::size_t i = 0; i < ys.size(); ++i) {
        ++r.examined;
        if (commutes[i] && commuting_pair_cyclic(x, ys[i])) {
          found(i);
          if (!options.exhaustive) break;
        }
      }
      break;
    case AdjacencyKind::nilpotent:
    case AdjacencyKind::solvable: {
      const bool want_nilpotent = kind == AdjacencyKind::nilpotent;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (commutes[i]) {
          found(i);
          if (!options.exhaustive) break;
        }
      }
      if (r.adjacent && !options.exhaustive) {
        r.examined = ys.size();
        break;
      }
      r.method.clear();
      add_method(r.method, "scan");
      for (std::size_t i = 0; i < ys.size(); ++i) {
        ++r.examined;
        if (commutes[i]) continue;
        std::vector<Permutation> gens{x, ys[i]};
        bool flag = false;
        std::string order_text;
        if (degree <= kClosureDegree) {
          auto facts = perm_group_facts(degree, gens);
          flag = want_nilpotent ? facts.nilpotent : facts.solvable;
          order_text = std::to_string(facts.order);
          add_method(r.method, "closure");
        } else {
          BigInt order = perm_group_order(degree, gens);
          const std::size_t s = support_union(x, ys[i]);
          order_text = order.str();
          if (s >= 5 && order == BigInt(factorial(s) / 2)) {
            // Contains the simple group A_s, s >= 5: neither solvable nor nilpotent.
            flag = false;
            add_method(r.method, "order-certificate");
          } else if (order <= kClosureFallbackOrder) {
            auto facts = perm_group_facts(degree, gens);
            flag = want_nilpotent ? facts.nilpotent : facts.solvable;
            add_method(r.method, "closure");
          } else {
            throw CapExceeded("cannot certify <x, y> of order " + order.str() + " in S_" + std::to_string(degree));
          }
        }
        ++r.generated_orders[order_text];
        if (flag) {
          found(i);
          if (!options.exhaustive) break;
        }
      }
      break;
    }
    case AdjacencyKind::power:
      break;
  }
  return r;
}

std::size_t step3_degree(const std::vector<std::uint64_t>& primes, bool with_nonedge) {
  if (primes.size() < 2) throw InvalidArgument("construction needs at least two primes");
  const auto n = primes.size();
  return static_cast<std::size_t>(primes[n - 2] + primes[n - 1] - (with_nonedge ? 1 : 0));
}

Step3Result step3_embedding(const std::vector<std::uint64_t>& primes, AdjacencyKind kind, bool with_nonedge,
                            bool arithmetic_only) {
  require_scan_kind(kind);
  if (primes.size() < 3) throw InvalidArgument("construction needs n >= 3");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw InvalidArgument(std::to_string(primes[i]) + " is not prime");
    if (i && primes[i] <= primes[i - 1]) throw InvalidArgument("primes must be strictly increasing");
  }
  Step3Result r;
  r.n = primes.size();
  r.primes = primes;
  r.with_nonedge = with_nonedge;
  r.degree = step3_degree(primes, with_nonedge);
  r.arithmetic_only = arithmetic_only;
  if (!arithmetic_only && r.degree > kMaxSymmetricDegree)
    throw CapExceeded("construction at n=" + std::to_string(r.n) + " needs S_" + std::to_string(r.degree) +
                      ", above the degree cap " + std::to_string(kMaxSymmetricDegree));
  std::vector<std::string> labels;
  for (auto p : primes) labels.push_back(std::to_string(p) + "-cycles");
  r.graph = Graph(std::move(labels));
  for (std::size_t i = 0; i < r.n; ++i) {
    for (std::size_t j = i + 1; j < r.n; ++j) {
      ClassAdjacency a;
      if (arithmetic_only) {
        a.degree = r.degree;
        a.p = primes[i];
        a.q = primes[j];
        a.kind = kind;
        a.adjacent = primes[i] + primes[j] <= r.degree;
        a.method = "arithmetic";
      } else {
        a = class_adjacency(r.degree, primes[i], primes[j], kind);
      }
      if (a.adjacent) r.graph.add_edge(i, j);
      r.pairs.push_back(std::move(a));
    }
  }
  return r;
}

Step3Result step3_embedding(std::size_t n, AdjacencyKind kind, bool with_nonedge) {
  if (n < 3) throw InvalidArgument("construction needs n >= 3");
  return step3_embedding(primes_first(n), kind, with_nonedge);
}

namespace {

std::vector<Edge> nonedges_of(const Graph& g) { return g.complement().edges(); }

// Primes per target vertex: the nonedge gets the two largest, everyone else
// the remaining primes in vertex order.
std::vector<std::uint64_t> assign_primes(std::size_t n, const std::vector<std::uint64_t>& primes,
                                         std::optional<Edge> nonedge) {
  std::vector<std::uint64_t> out(n);
  if (!nonedge) return primes;
  out[nonedge->first] = primes[n - 2];
  out[nonedge->second] = primes[n - 1];
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (v != nonedge->first && v != nonedge->second) out[v] = primes[next++];
  return out;
}

EmbeddingFactor make_factor(const Graph& target, const Step3Result& s, std::optional<Edge> nonedge) {
  const std::size_t n = target.size();
  EmbeddingFactor f;
  f.nonedge = nonedge;
  f.primes = s.primes;
  f.degree = s.degree;
  f.arithmetic_only = s.arithmetic_only;
  for (const auto& pr : s.pairs) add_method(f.method, pr.method);
  f.vertex_primes = assign_primes(n, s.primes, nonedge);
  auto class_index = [&](std::uint64_t p) {
    return static_cast<Vertex>(std::find(s.primes.begin(), s.primes.end(), p) - s.primes.begin());
  };
  f.factor_graph = Graph(target.labels());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (s.graph.has_edge(class_index(f.vertex_primes[u]), class_index(f.vertex_primes[v])))
        f.factor_graph.add_edge(u, v);
  return f;
}

void finish(EmbeddingCertificate& c, const EmbedOptions& options) {
  const std::size_t n = c.target.size();
  c.final_graph = Graph::complete(n).with_labels(c.target.labels());
  bool factors_ok = true;
  for (const auto& f : c.factors) {
    c.final_graph = intersection(c.final_graph, f.factor_graph);
    c.arithmetic_only = c.arithmetic_only || f.arithmetic_only;
    // Each factor must be K_n minus exactly its own nonedge.
    Graph expected = Graph::complete(n).with_labels(c.target.labels());
    if (f.nonedge) expected.remove_edge(f.nonedge->first, f.nonedge->second);
    factors_ok = factors_ok && f.factor_graph == expected;
  }
  c.witness.resize(n);
  std::iota(c.witness.begin(), c.witness.end(), Vertex{0});

  // The diagonal of the iterated strong product realises the intersection.
  std::size_t total = 1;
  bool small = true;
  for (std::size_t k = 0; k < c.factors.size() && small; ++k) {
    total *= n;
    small = total <= options.diagonal_limit;
  }
  if (small) {
    Graph product = c.factors.front().factor_graph;
    for (std::size_t k = 1; k < c.factors.size(); ++k) product = strong_product(product, c.factors[k].factor_graph);
    std::size_t step = 0;
    for (std::size_t k = 0, pw = 1; k < c.factors.size(); ++k, pw *= n) step += pw;
    std::vector<Vertex> diagonal;
    for (Vertex v = 0; v < n; ++v) diagonal.push_back(v * step);
    Graph diag = induced_subgraph_ordered(product, diagonal);
    c.diagonal_checked = true;
    c.diagonal_matches = diag.with_labels(c.target.labels()) == c.final_graph;
  }
  c.verified = factors_ok && c.final_graph == c.target && is_isomorphism(c.target, c.final_graph, c.witness) &&
               (!c.diagonal_checked || c.diagonal_matches);
}

Graph plain_target(const Graph& target) {
  if (target.size() < 3) throw InvalidArgument("embedding needs a target with at least 3 vertices");
  return target;
}

}  // namespace

EmbeddingCertificate embed_graph(const Graph& target, AdjacencyKind kind, EmbedOptions options) {
  if (kind != AdjacencyKind::commuting && kind != AdjacencyKind::nilpotent && kind != AdjacencyKind::solvable)
    throw InvalidArgument("embed_graph supports commuting, nilpotent and solvable kinds");
  EmbeddingCertificate c;
  c.target = plain_target(target);
  c.kind = kind;
  const std::size_t n = target.size();
  const auto primes = primes_first(n);
  const auto nonedges = nonedges_of(target);
  const bool complete = nonedges.empty();
  const bool over = step3_degree(primes, !complete) > kMaxSymmetricDegree;
  if (over && !options.allow_arithmetic_only)
    throw CapExceeded("embedding a " + std::to_string(n) + "-vertex graph needs S_" +
                      std::to_string(step3_degree(primes, !complete)) + ", above the degree cap");
  Step3Result s = step3_embedding(primes, kind, !complete, over);
  if (complete) {
    c.factors.push_back(make_factor(target, s, std::nullopt));
  } else {
    for (const auto& e : nonedges) c.factors.push_back(make_factor(target, s, e));
  }
  finish(c, options);
  return c;
}

EmbeddingCertificate enhanced_embed(const Graph& target, EmbedOptions options) {
  const std::size_t n = plain_target(target).size();
  const std::size_t k = std::max<std::size_t>(1, nonedges_of(target).size());
  const auto all = primes_first(n * k);
  std::vector<std::vector<std::uint64_t>> sets;
  for (std::size_t t = 0; t < k; ++t) sets.emplace_back(all.begin() + t * n, all.begin() + (t + 1) * n);
  return enhanced_embed(target, sets, options);
}

EmbeddingCertificate enhanced_embed(const Graph& target, const std::vector<std::vector<std::uint64_t>>& prime_sets,
                                    EmbedOptions options) {
  EmbeddingCertificate c;
  c.target = plain_target(target);
  c.kind = AdjacencyKind::enhanced;
  const std::size_t n = target.size();
  const auto nonedges = nonedges_of(target);
  const bool complete = nonedges.empty();
  if (prime_sets.size() != std::max<std::size_t>(1, nonedges.size()))
    throw InvalidArgument("need one prime set per nonedge");
  std::set<std::uint64_t> seen;
  for (const auto& set : prime_sets) {
    if (set.size() != n) throw InvalidArgument("each prime set needs one prime per vertex");
    for (auto p : set)
      if (!seen.insert(p).second) throw InvalidArgument("prime sets are not pairwise disjoint");
  }
  for (std::size_t t = 0; t < prime_sets.size(); ++t) {
    std::vector<std::uint64_t> primes = prime_sets[t];
    if (!std::is_sorted(primes.begin(), primes.end())) throw InvalidArgument("prime sets must be increasing");
    const bool over = step3_degree(primes, !complete) > kMaxSymmetricDegree;
    if (over && !options.allow_arithmetic_only)
      throw CapExceeded("prime set " + std::to_string(t) + " needs S_" +
                        std::to_string(step3_degree(primes, !complete)) + ", above the degree cap");
    Step3Result s = step3_embedding(primes, AdjacencyKind::enhanced, !complete, over);
    c.factors.push_back(make_factor(target, s, complete ? std::nullopt : std::optional<Edge>(nonedges[t])));
  }
  finish(c, options);
  // Coordinates of diagonal elements generate cyclic groups of order
  // p_t(u) p_t(v); these must be pairwise coprime across factors.
  c.coprime_check = true;
  for (auto [u, v] : c.final_graph.edges()) {
    std::vector<std::uint64_t> orders;
    for (const auto& f : c.factors) orders.push_back(f.vertex_primes[u] * f.vertex_primes[v]);
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t j = i + 1; j < orders.size(); ++j)
        if (std::gcd(orders[i], orders[j]) != 1) c.coprime_check = false;
  }
  c.verified = c.verified && c.coprime_check;
  return c;
}

StrongProductCheck strong_product_identity_check(const GroupSpec& a, const GroupSpec& b, AdjacencyKind kind) {
  if (kind != AdjacencyKind::commuting && kind != AdjacencyKind::nilpotent && kind != AdjacencyKind::solvable)
    throw InvalidArgument("strong product identity holds for commuting, nilpotent and solvable kinds");
  FiniteGroup g = make_group(a);
  FiniteGroup h = make_group(b);
  FiniteGroup gh = make_group(GroupSpec::product(a, b));
  StrongProductCheck r;
  Graph cg = build_compressed(g, kind);
  Graph ch = build_compressed(h, kind);
  r.direct = build_compressed(gh, kind);
  r.product = strong_product(cg, ch);
  Partition pg = build_partition(g, PartitionKind::conjugacy);
  Partition ph = build_partition(h, PartitionKind::conjugacy);
  Partition pgh = build_partition(gh, PartitionKind::conjugacy);
  for (std::size_t i = 0; i < pgh.size(); ++i) {
    Element rep = pgh.representative(i);
    Element x = static_cast<Element>(rep / h.size()), y = static_cast<Element>(rep % h.size());
    r.witness.push_back(pg.class_of[x] * ph.size() + ph.class_of[y]);
  }
  r.holds = is_isomorphism(r.direct, r.product, r.witness);
  return r;
}

}  // namespace supergraphs
