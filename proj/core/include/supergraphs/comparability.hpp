#pragma once

#include <cstddef>

#include "supergraphs/graph.hpp"

namespace supergraphs {

inline constexpr std::size_t kComparabilityCap = 512;

/// True iff the edges admit a transitive orientation.
///
/// Orients edges through the forcing relation: ab forces ab' when b, b' are
/// non-adjacent, and a'b when a, a' are non-adjacent. The graph is a
/// comparability graph iff no forcing class contains both ab and ba.
/// Throws CapExceeded above kComparabilityCap vertices.
bool is_comparability(const Graph& g);

}  // namespace supergraphs
