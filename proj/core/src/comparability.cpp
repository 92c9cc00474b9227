#include "supergraphs/comparability.hpp"

#include <numeric>
#include <vector>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_comparability(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kComparabilityCap) {
    throw CapExceeded("comparability test is limited to " + std::to_string(kComparabilityCap) + " vertices");
  }
  // Directed edge u->v has id u*n+v; only ids of actual edges are used.
  DisjointSets arcs(n * n);
  for (Vertex a = 0; a < n; ++a) {
    auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        Vertex b = nbrs[i], c = nbrs[j];
        if (g.has_edge(b, c)) continue;
        // a->b forces a->c, and b->a forces c->a.
        arcs.unite(a * n + b, a * n + c);
        arcs.unite(b * n + a, c * n + a);
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (arcs.find(u * n + v) == arcs.find(v * n + u)) return false;
  }
  return true;
}

}  // namespace supergraphs
