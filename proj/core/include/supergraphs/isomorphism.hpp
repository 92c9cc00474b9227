#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "supergraphs/graph.hpp"

namespace supergraphs {

inline constexpr std::size_t kIsomorphismCap = 64;

/// Searches for an adjacency-preserving bijection; mapping[v] is the image in
/// `b` of vertex v of `a`. Joint colour refinement seeded with degrees, then
/// backtracking over refined colour classes. Throws CapExceeded above
/// kIsomorphismCap vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

inline bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// True iff `mapping` is a bijection sending edges to edges and non-edges to non-edges.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping);

}  // namespace supergraphs
