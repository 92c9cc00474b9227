#pragma once

#include <string>

#include "supergraphs/graph.hpp"

namespace supergraphs {

/// Graphviz rendering; vertices are numbered in graph order and carry their labels.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace supergraphs
