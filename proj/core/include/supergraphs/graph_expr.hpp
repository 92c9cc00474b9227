#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supergraphs/graph.hpp"

namespace supergraphs {

/// Symbolic graph built from complete and edgeless graphs with join,
/// disjoint union and generalized composition.
class GraphExpr {
 public:
  enum class Kind { complete, empty, join, disjoint_union, composition };

  static GraphExpr complete(std::size_t n);
  static GraphExpr empty(std::size_t n);
  static GraphExpr join(GraphExpr left, GraphExpr right);
  static GraphExpr disjoint_union(std::vector<GraphExpr> parts);
  /// base[f_1, ..., f_k]; requires k == base.vertex_count().
  static GraphExpr composition(GraphExpr base, std::vector<GraphExpr> factors);

  Kind kind() const noexcept { return kind_; }
  /// Leaf size for complete/empty nodes.
  std::size_t leaf_size() const noexcept { return n_; }
  /// join: {left, right}; disjoint_union: parts; composition: {base, f_1, ..., f_k}.
  const std::vector<GraphExpr>& children() const noexcept { return children_; }
  std::size_t vertex_count() const;
  /// Compact text form, e.g. "K2 v (K1 u K1 u K2)" or "(K1 v (K1 u K1))[K1, K2, K3]".
  std::string to_string() const;

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;

 private:
  GraphExpr(Kind kind, std::size_t n, std::vector<GraphExpr> children);

  Kind kind_;
  std::size_t n_ = 0;
  std::vector<GraphExpr> children_;
};

/// Evaluates an expression. Leaves are labelled "0".."n-1"; inner nodes use
/// the labelling rules of join / disjoint_union / compose.
Graph eval_expr(const GraphExpr& e);

}  // namespace supergraphs
