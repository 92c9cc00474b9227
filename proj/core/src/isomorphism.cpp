#include "supergraphs/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

using Colouring = std::vector<std::size_t>;

// Refines both graphs with a shared colour dictionary so colours are comparable.
std::pair<Colouring, Colouring> refine_jointly(const Graph& a, const Graph& b) {
  Colouring ca(a.size()), cb(b.size());
  for (Vertex v = 0; v < a.size(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.size(); ++v) cb[v] = b.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> dict;
    auto signature = [](const Graph& g, const Colouring& c, Vertex v) {
      std::vector<std::size_t> sig;
      for (Vertex u : g.neighbors(v)) sig.push_back(c[u]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[v]);
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa, sb;
    for (Vertex v = 0; v < a.size(); ++v) dict.emplace(sa.emplace_back(signature(a, ca, v)), 0);
    for (Vertex v = 0; v < b.size(); ++v) dict.emplace(sb.emplace_back(signature(b, cb, v)), 0);
    std::size_t next = 0;
    for (auto& [sig, colour] : dict) colour = next++;
    for (Vertex v = 0; v < a.size(); ++v) ca[v] = dict[sa[v]];
    for (Vertex v = 0; v < b.size(); ++v) cb[v] = dict[sb[v]];
    if (dict.size() == classes) break;
    classes = dict.size();
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Colouring ca, Colouring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.size(), kUnset), used_(b.size(), false), mapped_neighbours_(a.size(), 0) {}

  bool run() { return extend(0); }
  std::vector<Vertex> mapping() const { return map_; }

 private:
  static constexpr Vertex kUnset = static_cast<Vertex>(-1);

  Vertex pick_next() const {
    Vertex best = kUnset;
    for (Vertex v = 0; v < a_.size(); ++v) {
      if (map_[v] != kUnset) continue;
      if (best == kUnset || mapped_neighbours_[v] > mapped_neighbours_[best]) best = v;
    }
    return best;
  }

  bool consistent(Vertex v, Vertex w) const {
    for (Vertex u = 0; u < a_.size(); ++u) {
      if (map_[u] == kUnset) continue;
      if (a_.has_edge(v, u) != b_.has_edge(w, map_[u])) return false;
    }
    return true;
  }

  void assign(Vertex v, Vertex w, int delta) {
    for (Vertex u : a_.neighbors(v)) mapped_neighbours_[u] += delta;
    if (delta > 0) {
      map_[v] = w;
      used_[w] = true;
    } else {
      map_[v] = kUnset;
      used_[w] = false;
    }
  }

  bool extend(std::size_t depth) {
    if (depth == a_.size()) return true;
    Vertex v = pick_next();
    for (Vertex w = 0; w < b_.size(); ++w) {
      if (used_[w] || cb_[w] != ca_[v] || !consistent(v, w)) continue;
      assign(v, w, +1);
      if (extend(depth + 1)) return true;
      assign(v, w, -1);
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  Colouring ca_, cb_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<int> mapped_neighbours_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() > kIsomorphismCap || b.size() > kIsomorphismCap) {
    throw CapExceeded("isomorphism search is limited to " + std::to_string(kIsomorphismCap) + " vertices");
  }
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto [ca, cb] = refine_jointly(a, b);
  auto histogram = [](Colouring c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(ca) != histogram(cb)) return std::nullopt;
  Matcher m(a, b, std::move(ca), std::move(cb));
  if (!m.run()) return std::nullopt;
  return m.mapping();
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping) {
  if (a.size() != b.size() || mapping.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Vertex w : mapping) {
    if (w >= b.size() || hit[w]) return false;
    hit[w] = true;
  }
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = u + 1; v < a.size(); ++v)
      if (a.has_edge(u, v) != b.has_edge(mapping[u], mapping[v])) return false;
  return true;
}

}  // namespace supergraphs
