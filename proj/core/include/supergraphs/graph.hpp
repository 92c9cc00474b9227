#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supergraphs {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph with one unique, opaque label per vertex.
/// Adjacency is a dense symmetric matrix; the graphs built here are small.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on the given labels. Throws InvalidArgument on duplicates.
  explicit Graph(std::vector<std::string> labels);

  static Graph empty(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_label(const std::string& label) const;

  bool has_edge(Vertex u, Vertex v) const { return adj_[u * size() + v] != 0; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  bool is_complete() const noexcept { return 2 * edge_count_ == size() * (size() ? size() - 1 : 0); }

  /// True when both graphs carry identical labels in identical order.
  bool same_vertices(const Graph& other) const noexcept { return labels_ == other.labels_; }
  /// Same vertex labels and every edge of *this is an edge of `other`.
  bool is_spanning_subgraph_of(const Graph& other) const;
  Graph complement() const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;
};

/// G1 v G2: disjoint union plus every cross edge. Labels "0.<u>" and "1.<v>".
Graph join(const Graph& a, const Graph& b);
/// Labels "<k>.<v>" for operand k.
Graph disjoint_union(const std::vector<Graph>& parts);
/// Generalized composition base[f_1, ..., f_k]. Vertices are listed factor by
/// factor in base order; vertex p of factor i is labelled "<base label i>.<p label>".
Graph compose(const Graph& base, const std::vector<Graph>& factors);
/// Strong product with vertices in row-major pair order, labels "(<u>,<v>)".
Graph strong_product(const Graph& a, const Graph& b);
/// Edge-set intersection of two graphs on identical labels.
Graph intersection(const Graph& a, const Graph& b);
/// Subgraph induced on `subset`, vertices kept in ascending original order.
Graph induced_subgraph(const Graph& g, std::vector<Vertex> subset);
/// Subgraph induced on `vertices`, kept in the given order (no duplicates).
Graph induced_subgraph_ordered(const Graph& g, const std::vector<Vertex>& vertices);
/// Vertices adjacent to every other vertex.
std::vector<Vertex> dominant_vertices(const Graph& g);

}  // namespace supergraphs
