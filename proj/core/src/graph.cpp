#include "supergraphs/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidArgument("duplicate vertex label '" + l + "'");
  }
  adj_.assign(labels_.size() * labels_.size(), 0);
}

Graph Graph::empty(std::size_t n) { return Graph(index_labels(n)); }

Graph Graph::complete(std::size_t n) {
  Graph g = empty(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g = empty(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges) {
  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return from_edges(index_labels(n), edges);
}

std::optional<Vertex> Graph::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (adj_[u * size() + v]) return;
  adj_[u * size() + v] = adj_[v * size() + u] = 1;
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!adj_[u * size() + v]) return;
  adj_[u * size() + v] = adj_[v * size() + u] = 0;
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count(adj_.begin() + static_cast<std::ptrdiff_t>(v * size()),
                 adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * size()), std::uint8_t{1}));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < size(); ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

bool Graph::is_spanning_subgraph_of(const Graph& other) const {
  if (!same_vertices(other)) return false;
  for (std::size_t k = 0; k < adj_.size(); ++k)
    if (adj_[k] && !other.adj_[k]) return false;
  return true;
}

Graph Graph::complement() const {
  Graph g = *this;
  g.edge_count_ = 0;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v = 0; v < size(); ++v) {
      auto& cell = g.adj_[u * size() + v];
      cell = (u != v && !adj_[u * size() + v]) ? 1 : 0;
      if (cell && u < v) ++g.edge_count_;
    }
  }
  return g;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw InvalidArgument("label count mismatch");
  Graph g(std::move(labels));
  g.adj_ = adj_;
  g.edge_count_ = edge_count_;
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union({a, b});
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = 0; v < b.size(); ++v) g.add_edge(u, a.size() + v);
  return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& l : parts[k].labels()) labels.push_back(std::to_string(k) + "." + l);
  Graph g(std::move(labels));
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (auto [u, v] : part.edges()) g.add_edge(offset + u, offset + v);
    offset += part.size();
  }
  return g;
}

Graph compose(const Graph& base, const std::vector<Graph>& factors) {
  if (factors.size() != base.size()) {
    throw InvalidArgument("composition needs one factor per base vertex (" +
                          std::to_string(base.size()) + "), got " + std::to_string(factors.size()));
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> offset(factors.size() + 1, 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& l : factors[i].labels()) labels.push_back(base.label(i) + "." + l);
    offset[i + 1] = offset[i] + factors[i].size();
  }
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto [p, q] : factors[i].edges()) g.add_edge(offset[i] + p, offset[i] + q);
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!base.has_edge(i, j)) continue;
      for (std::size_t p = offset[i]; p < offset[i + 1]; ++p)
        for (std::size_t q = offset[j]; q < offset[j + 1]; ++q) g.add_edge(p, q);
    }
  }
  return g;
}

Graph strong_product(const Graph& a, const Graph& b) {
  const std::size_t m = b.size();
  std::vector<std::string> labels;
  labels.reserve(a.size() * m);
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + "," + lb + ")");
  Graph g(std::move(labels));
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex u2 = 0; u2 < m; ++u2) {
      for (Vertex v = u; v < a.size(); ++v) {
        const bool first = (u == v) || a.has_edge(u, v);
        if (!first) continue;
        for (Vertex v2 = 0; v2 < m; ++v2) {
          if (u == v && v2 <= u2) continue;
          const bool second = (u2 == v2) || b.has_edge(u2, v2);
          if (second) g.add_edge(u * m + u2, v * m + v2);
        }
      }
    }
  }
  return g;
}

Graph intersection(const Graph& a, const Graph& b) {
  if (!a.same_vertices(b)) throw InvalidArgument("intersection needs identical vertex labels");
  Graph g(a.labels());
  for (auto [u, v] : a.edges())
    if (b.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph induced_subgraph(const Graph& g, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  return induced_subgraph_ordered(g, subset);
}

Graph induced_subgraph_ordered(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<std::string> labels;
  for (Vertex v : vertices) {
    if (v >= g.size()) throw InvalidArgument("vertex out of range");
    labels.push_back(g.label(v));
  }
  Graph h(std::move(labels));  // duplicate vertices surface as duplicate labels
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

std::vector<Vertex> dominant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  return out;
}

}  // namespace supergraphs
