#include "supergraphs/graph_expr.hpp"

#include "supergraphs/error.hpp"

namespace supergraphs {

GraphExpr::GraphExpr(Kind kind, std::size_t n, std::vector<GraphExpr> children)
    : kind_(kind), n_(n), children_(std::move(children)) {}

GraphExpr GraphExpr::complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("K_n needs n >= 1");
  return GraphExpr(Kind::complete, n, {});
}

GraphExpr GraphExpr::empty(std::size_t n) {
  if (n == 0) throw InvalidArgument("empty graph needs n >= 1");
  return GraphExpr(Kind::empty, n, {});
}

GraphExpr GraphExpr::join(GraphExpr left, GraphExpr right) {
  std::vector<GraphExpr> kids;
  kids.push_back(std::move(left));
  kids.push_back(std::move(right));
  return GraphExpr(Kind::join, 0, std::move(kids));
}

GraphExpr GraphExpr::disjoint_union(std::vector<GraphExpr> parts) {
  if (parts.empty()) throw InvalidArgument("disjoint union needs at least one part");
  return GraphExpr(Kind::disjoint_union, 0, std::move(parts));
}

GraphExpr GraphExpr::composition(GraphExpr base, std::vector<GraphExpr> factors) {
  if (factors.size() != base.vertex_count()) {
    throw InvalidArgument("composition factor count " + std::to_string(factors.size()) +
                          " differs from base vertex count " + std::to_string(base.vertex_count()));
  }
  std::vector<GraphExpr> kids;
  kids.push_back(std::move(base));
  for (auto& f : factors) kids.push_back(std::move(f));
  return GraphExpr(Kind::composition, 0, std::move(kids));
}

std::size_t GraphExpr::vertex_count() const {
  switch (kind_) {
    case Kind::complete:
    case Kind::empty: return n_;
    case Kind::join:
    case Kind::disjoint_union: {
      std::size_t total = 0;
      for (const auto& c : children_) total += c.vertex_count();
      return total;
    }
    case Kind::composition: {
      std::size_t total = 0;
      for (std::size_t i = 1; i < children_.size(); ++i) total += children_[i].vertex_count();
      return total;
    }
  }
  return 0;
}

std::string GraphExpr::to_string() const {
  auto wrap = [](const GraphExpr& e) {
    bool leaf = e.kind() == Kind::complete || e.kind() == Kind::empty;
    return leaf ? e.to_string() : "(" + e.to_string() + ")";
  };
  switch (kind_) {
    case Kind::complete: return "K" + std::to_string(n_);
    case Kind::empty: return "E" + std::to_string(n_);
    case Kind::join: return wrap(children_[0]) + " v " + wrap(children_[1]);
    case Kind::disjoint_union: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) out += (i ? " u " : "") + wrap(children_[i]);
      return out;
    }
    case Kind::composition: {
      std::string out = wrap(children_[0]) + "[";
      for (std::size_t i = 1; i < children_.size(); ++i) out += (i > 1 ? ", " : "") + children_[i].to_string();
      return out + "]";
    }
  }
  return {};
}

Graph eval_expr(const GraphExpr& e) {
  using Kind = GraphExpr::Kind;
  switch (e.kind()) {
    case Kind::complete: return Graph::complete(e.leaf_size());
    case Kind::empty: return Graph::empty(e.leaf_size());
    case Kind::join: return join(eval_expr(e.children()[0]), eval_expr(e.children()[1]));
    case Kind::disjoint_union: {
      std::vector<Graph> parts;
      for (const auto& c : e.children()) parts.push_back(eval_expr(c));
      return disjoint_union(parts);
    }
    case Kind::composition: {
      Graph base = eval_expr(e.children()[0]);
      std::vector<Graph> factors;
      for (std::size_t i = 1; i < e.children().size(); ++i) factors.push_back(eval_expr(e.children()[i]));
      return compose(base, factors);
    }
  }
  throw InvalidArgument("unknown expression node");
}

}  // namespace supergraphs
