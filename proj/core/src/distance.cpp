#include "supergraphs/distance.hpp"

#include <algorithm>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

std::uint64_t pairs(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

bool DistanceMatrix::connected() const noexcept {
  return std::none_of(data_.begin(), data_.end(), [](auto d) { return d == unreachable; });
}

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<std::uint32_t> data(n * n, DistanceMatrix::unreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = data.data() + s * n;
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : adj[u]) {
        if (row[v] == DistanceMatrix::unreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(data));
}

bool is_connected(const Graph& g) { return distance_matrix(g).connected(); }

std::uint64_t wiener_index(const Graph& g) {
  DistanceMatrix d = distance_matrix(g);
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (d(u, v) == DistanceMatrix::unreachable) {
        throw DisconnectedGraph("Wiener index undefined: graph is disconnected");
      }
      total += d(u, v);
    }
  }
  return total;
}

CompositionWitness CompositionWitness::make(Graph base, std::vector<std::size_t> sizes,
                                            std::vector<FactorKind> kinds) {
  if (sizes.size() != base.size() || kinds.size() != base.size()) {
    throw InvalidArgument("composition needs one factor per base vertex");
  }
  CompositionWitness w{std::move(base), std::move(sizes), std::move(kinds), {}};
  for (std::size_t i = 0; i < w.factor_sizes.size(); ++i) {
    if (w.factor_sizes[i] == 0) throw InvalidArgument("factor sizes must be positive");
    for (std::size_t p = 0; p < w.factor_sizes[i]; ++p) w.vertex_map.emplace_back(i, p);
  }
  return w;
}

Graph CompositionWitness::evaluate() const {
  std::vector<Graph> factors;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) {
    factors.push_back(factor_kinds[i] == FactorKind::complete ? Graph::complete(factor_sizes[i])
                                                              : Graph::empty(factor_sizes[i]));
  }
  return compose(base, factors);
}

std::uint64_t wiener_via_composition(const CompositionWitness& w) {
  const std::size_t k = w.base.size();
  if (w.factor_sizes.size() != k || w.factor_kinds.size() != k) {
    throw InvalidArgument("composition needs one factor per base vertex");
  }
  DistanceMatrix d = distance_matrix(w.base);
  if (!d.connected()) throw DisconnectedGraph("composition base must be connected");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t ni = w.factor_sizes[i];
    if (w.factor_kinds[i] == FactorKind::complete) {
      total += pairs(ni);
    } else {
      if (ni >= 2 && w.base.degree(i) == 0) {
        throw InvalidArgument("empty factor of size " + std::to_string(ni) +
                              " sits on an isolated base vertex; its vertices are unreachable");
      }
      total += 2 * pairs(ni);
    }
    for (std::size_t j = i + 1; j < k; ++j) total += ni * w.factor_sizes[j] * d(i, j);
  }
  return total;
}

std::uint64_t wiener_supergraph_formula(const Graph& delta, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != delta.size()) throw InvalidArgument("one class size per quotient vertex required");
  if (std::any_of(sizes.begin(), sizes.end(), [](auto s) { return s == 0; })) {
    throw InvalidArgument("class sizes must be positive");
  }
  DistanceMatrix d = distance_matrix(delta);
  if (!d.connected()) throw DisconnectedGraph("quotient graph must be connected");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] > 1) total += pairs(sizes[i]);
    for (std::size_t j = i + 1; j < sizes.size(); ++j) total += std::uint64_t{sizes[i]} * sizes[j] * d(i, j);
  }
  return total;
}

}  // namespace supergraphs
