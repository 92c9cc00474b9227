#include "supergraphs/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace supergraphs {

namespace {

struct Closure {
  std::vector<char> mark;
  std::vector<Element> members;
};

Closure close_under(const FiniteGroup& g, const std::vector<Element>& gens) {
  Closure c;
  c.mark.assign(g.size(), 0);
  c.mark[FiniteGroup::identity()] = 1;
  c.members.push_back(FiniteGroup::identity());
  for (std::size_t k = 0; k < c.members.size(); ++k) {
    Element m = c.members[k];
    for (Element s : gens) {
      Element p = g.mul(m, s);
      if (!c.mark[p]) {
        c.mark[p] = 1;
        c.members.push_back(p);
      }
    }
  }
  return c;
}

Element group_commutator(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

// Greedy generating set for an already-closed member list.
std::vector<Element> reduce_generators(const FiniteGroup& g, const std::vector<Element>& members) {
  std::vector<Element> gens;
  Closure current = close_under(g, gens);
  for (Element m : members) {
    if (current.mark[m]) continue;
    gens.push_back(m);
    current = close_under(g, gens);
  }
  return gens;
}

Subgroup make_subgroup(const FiniteGroup& g, Closure c, std::vector<Element> gens) {
  std::sort(c.members.begin(), c.members.end());
  return Subgroup(g, std::move(c.members), std::move(gens));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string label, std::vector<std::string> names,
                                    std::vector<Element> table) {
  FiniteGroup g;
  g.label_ = std::move(label);
  g.order_ = names.size();
  g.exact_order_ = g.order_;
  if (g.order_ == 0) throw InvalidSpec("group must have at least one element");
  if (table.size() != g.order_ * g.order_) throw InvalidSpec("Cayley table has wrong size");
  for (Element x : table) {
    if (x >= g.order_) throw InvalidSpec("Cayley table entry out of range");
  }
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  for (std::size_t a = 0; a < g.order_; ++a) {
    auto e = static_cast<Element>(a);
    if (g.mul(0, e) != e || g.mul(e, 0) != e) throw InvalidSpec("element 0 is not the identity");
  }
  g.fill_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string label, std::size_t degree,
                                           std::vector<Permutation> elements,
                                           std::vector<Permutation> generators) {
  if (elements.empty() || !elements.front().is_identity()) {
    throw InvalidSpec("permutation element list must start with the identity");
  }
  FiniteGroup g;
  g.label_ = std::move(label);
  g.order_ = elements.size();
  g.exact_order_ = g.order_;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.index_of_.reserve(g.order_ * 2);
  for (std::size_t i = 0; i < g.order_; ++i) {
    if (elements[i].degree() != degree) throw InvalidSpec("permutation degree mismatch");
    if (!g.index_of_.emplace(elements[i], static_cast<Element>(i)).second) {
      throw InvalidSpec("duplicate permutation in element list");
    }
    g.names_.push_back(elements[i].to_string());
  }
  g.table_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (std::size_t b = 0; b < g.order_; ++b) {
      auto it = g.index_of_.find(elements[a] * elements[b]);
      if (it == g.index_of_.end()) throw InvalidSpec("permutation set is not closed");
      g.table_[a * g.order_ + b] = it->second;
    }
  }
  g.perms_ = std::move(elements);
  g.fill_inverses();
  return g;
}

FiniteGroup FiniteGroup::generated_only(std::string label, std::size_t degree,
                                        std::vector<Permutation> generators, BigInt order) {
  FiniteGroup g;
  g.label_ = std::move(label);
  g.enumerated_ = false;
  g.exact_order_ = std::move(order);
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  return g;
}

void FiniteGroup::fill_inverses() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidSpec("element " + std::to_string(a) + " has no inverse");
  }
}

void FiniteGroup::require_enumerated() const {
  if (!enumerated_) {
    throw CapExceeded("group " + label_ + " of order " + exact_order_.str() +
                      " is held by generators only; element enumeration exceeds the Cayley cap");
  }
}

std::size_t FiniteGroup::size() const {
  require_enumerated();
  return order_;
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  auto it = index_of_.find(p);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroup::check_axioms(std::size_t exhaustive_limit) const {
  require_enumerated();
  for (std::size_t a = 0; a < order_; ++a) {
    auto x = static_cast<Element>(a);
    if (mul(0, x) != x || mul(x, 0) != x) throw InvalidSpec("identity law fails");
    if (mul(x, inverse_[a]) != 0 || mul(inverse_[a], x) != 0) throw InvalidSpec("inverse law fails");
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw InvalidSpec("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
    }
  };
  if (order_ <= exhaustive_limit) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c) assoc(a, b, c);
    return;
  }
  std::mt19937_64 rng(order_);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
  for (int k = 0; k < 200000; ++k) assoc(pick(rng), pick(rng), pick(rng));
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> members,
                   std::vector<Element> generators)
    : parent_(&parent), members_(std::move(members)), generators_(std::move(generators)) {}

bool Subgroup::contains(Element g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  if (x >= g.size()) throw InvalidArgument("element index out of range");
  std::uint64_t k = 1;
  for (Element p = x; p != FiniteGroup::identity(); p = g.mul(p, x)) ++k;
  return k;
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.size()) throw InvalidArgument("element index out of range");
  std::vector<Element> members;
  for (Element y = 0; y < g.size(); ++y) {
    if (g.commute(x, y)) members.push_back(y);
  }
  auto gens = reduce_generators(g, members);
  return Subgroup(g, std::move(members), std::move(gens));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<char> assigned(n, 0);
  std::vector<ConjugacyClass> out;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ConjugacyClass c;
    c.representative = x;
    for (Element y = 0; y < n; ++y) {
      Element z = g.conjugate(x, y);
      if (!assigned[z]) {
        assigned[z] = 1;
        c.members.push_back(z);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  std::vector<std::uint64_t> order_of(n, 0);
  for (const auto& c : out) order_of[c.representative] = element_order(g, c.representative);
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return std::pair(order_of[a.representative], a.representative) <
           std::pair(order_of[b.representative], b.representative);
  });
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element x : gens) {
    if (x >= g.size()) throw InvalidArgument("generator index out of range");
  }
  return make_subgroup(g, close_under(g, gens), gens);
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.size());
  std::iota(all.begin(), all.end(), Element{0});
  auto gens = reduce_generators(g, all);
  return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup normal_closure(const Subgroup& h, const std::vector<Element>& seeds) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (s != FiniteGroup::identity()) gens.push_back(s);
  }
  Closure k = close_under(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y : h.generators()) {
      Element c = g.conjugate(gens[i], y);
      if (!k.mark[c]) {
        gens.push_back(c);
        k = close_under(g, gens);
      }
    }
  }
  return make_subgroup(g, std::move(k), std::move(gens));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& gens = h.generators();
  std::vector<Element> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(group_commutator(g, gens[i], gens[j]));
  return normal_closure(h, seeds);
}

Subgroup commutator_subgroup(const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> seeds;
  for (Element x : n.generators())
    for (Element y : h.generators()) seeds.push_back(group_commutator(g, x, y));
  return normal_closure(h, seeds);
}

std::vector<std::size_t> derived_series_sizes(const Subgroup& h) {
  std::vector<std::size_t> sizes{h.size()};
  Subgroup current = h;
  while (current.size() > 1) {
    Subgroup next = derived_subgroup(current);
    if (next.size() == current.size()) break;
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

std::vector<std::size_t> lower_central_series_sizes(const Subgroup& h) {
  std::vector<std::size_t> sizes{h.size()};
  Subgroup current = h;
  while (current.size() > 1) {
    Subgroup next = commutator_subgroup(current, h);
    if (next.size() == current.size()) break;
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

SubgroupFlags classify_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  SubgroupFlags f;
  f.is_cyclic = std::any_of(h.members().begin(), h.members().end(),
                            [&](Element x) { return element_order(g, x) == h.size(); });
  const auto& gens = h.generators();
  f.is_abelian = true;
  for (std::size_t i = 0; i < gens.size() && f.is_abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) {
        f.is_abelian = false;
        break;
      }
  if (f.is_abelian) {
    f.is_nilpotent = f.is_solvable = true;
    return f;
  }
  f.is_nilpotent = lower_central_series_sizes(h).back() == 1;
  f.is_solvable = f.is_nilpotent || derived_series_sizes(h).back() == 1;
  return f;
}

}  // namespace supergraphs
