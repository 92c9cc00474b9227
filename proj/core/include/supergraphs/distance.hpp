#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "supergraphs/graph.hpp"

namespace supergraphs {

/// All-pairs hop distances; `unreachable` marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t unreachable = UINT32_MAX;

  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> data) : n_(n), data_(std::move(data)) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return data_[u * n_ + v]; }
  bool connected() const noexcept;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> data_;
};

/// Breadth-first search from every vertex.
DistanceMatrix distance_matrix(const Graph& g);
bool is_connected(const Graph& g);

/// Sum of distances over unordered vertex pairs. Throws DisconnectedGraph.
std::uint64_t wiener_index(const Graph& g);

enum class FactorKind { complete, empty };

/// Shape of a generalized composition base[f_1, ..., f_k] whose factors are
/// complete or edgeless, plus the map from composed vertices to (i, p).
struct CompositionWitness {
  Graph base;
  std::vector<std::size_t> factor_sizes;
  std::vector<FactorKind> factor_kinds;
  std::vector<std::pair<std::size_t, std::size_t>> vertex_map;

  static CompositionWitness make(Graph base, std::vector<std::size_t> sizes,
                                 std::vector<FactorKind> kinds);
  /// The composed graph, vertices in vertex_map order.
  Graph evaluate() const;
};

/// Wiener index of a composition with complete/empty factors, from the base
/// distances alone: sum C(n_i,2) over complete factors, 2 C(n_i,2) over empty
/// factors, and n_i n_j d(i,j) over base pairs.
/// Throws DisconnectedGraph for a disconnected base and InvalidArgument for an
/// isolated base vertex carrying an empty factor with two or more vertices.
std::uint64_t wiener_via_composition(const CompositionWitness& w);

/// Wiener index of delta[K_{n_1}, ..., K_{n_k}].
std::uint64_t wiener_supergraph_formula(const Graph& delta, const std::vector<std::size_t>& sizes);

}  // namespace supergraphs
