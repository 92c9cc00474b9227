#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supergraphs/error.hpp"
#include "supergraphs/permutation.hpp"
#include "supergraphs/schreier_sims.hpp"

namespace supergraphs {

using Element = std::uint32_t;

/// Declarative description of a group, as accepted on the command line.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, quaternion, symmetric, alternating, product, table, permgens };

  Kind kind = Kind::cyclic;
  /// cyclic/dihedral/quaternion index, symmetric/alternating degree, permgens degree.
  int n = 1;
  std::vector<GroupSpec> factors;                          // product
  std::vector<std::vector<std::size_t>> rows;              // table
  std::vector<std::vector<std::vector<int>>> generators;   // permgens, 1-based cycles

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int n);
  static GroupSpec quaternion(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec product(GroupSpec a, GroupSpec b);
  static GroupSpec table(std::vector<std::vector<std::size_t>> rows);
  static GroupSpec permgens(int degree, std::vector<std::vector<std::vector<int>>> gens);

  /// Short conventional name: C6, D10 (order 10), Q8 (order 8), S4, A5, D6xC2.
  std::string label() const;
};

/// A finite group with elements 0..order-1, element 0 the identity.
///
/// Most groups are stored as a Cayley table. Permutation groups carry the
/// permutation of every element as well; permutation groups too large to
/// enumerate keep only their generators and answer order queries through a
/// stabilizer chain. Element-level operations on such groups throw CapExceeded.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string label, std::vector<std::string> names,
                                std::vector<Element> table);
  static FiniteGroup from_permutations(std::string label, std::size_t degree,
                                       std::vector<Permutation> elements,
                                       std::vector<Permutation> generators);
  static FiniteGroup generated_only(std::string label, std::size_t degree,
                                    std::vector<Permutation> generators, BigInt order);

  const std::string& label() const noexcept { return label_; }
  bool enumerated() const noexcept { return enumerated_; }
  /// Number of elements. Throws CapExceeded for non-enumerated groups.
  std::size_t size() const;
  const BigInt& exact_order() const noexcept { return exact_order_; }

  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// x^g = g^-1 x g.
  Element conjugate(Element x, Element g) const { return mul(mul(inverse_[g], x), g); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  const std::string& name(Element g) const { return names_.at(g); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool has_permutations() const noexcept { return degree_ > 0; }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Element g) const { return perms_.at(g); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::optional<Element> find(const Permutation& p) const;

  /// Associativity, identity and inverse laws: exhaustive up to
  /// `exhaustive_limit` elements, sampled triples beyond. Throws InvalidSpec.
  void check_axioms(std::size_t exhaustive_limit = 200) const;

 private:
  void require_enumerated() const;
  void fill_inverses();

  std::string label_;
  bool enumerated_ = true;
  std::size_t order_ = 0;
  BigInt exact_order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, Element, PermutationHash> index_of_;
};

/// C6, S3, D8, Q8, D10, A4, S4, C2xC4; `with_a5` appends A5.
std::vector<GroupSpec> default_catalog(bool with_a5 = false);

/// Builds a group from its spec. Throws InvalidSpec or CapExceeded.
FiniteGroup make_group(const GroupSpec& spec, std::size_t cap = cayley_cap());

/// A subgroup of an enumerated group. Holds a non-owning reference to its
/// parent, which must outlive it.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<Element> members, std::vector<Element> generators);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteGroup* parent_;
  std::vector<Element> members_;  // sorted
  std::vector<Element> generators_;
};

struct ConjugacyClass {
  Element representative = 0;    // minimum index in members
  std::vector<Element> members;  // sorted
};

struct SubgroupFlags {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
};

std::uint64_t element_order(const FiniteGroup& g, Element x);
Subgroup centralizer(const FiniteGroup& g, Element x);
/// Classes ordered by (element order of representative, representative).
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup whole_group(const FiniteGroup& g);
/// Normal closure in `h` of the subgroup generated by `seeds`.
Subgroup normal_closure(const Subgroup& h, const std::vector<Element>& seeds);
Subgroup derived_subgroup(const Subgroup& h);
/// [n, h] for a subgroup n normalised by h.
Subgroup commutator_subgroup(const Subgroup& n, const Subgroup& h);
/// Sizes along the derived series until it stabilises.
std::vector<std::size_t> derived_series_sizes(const Subgroup& h);
/// Sizes along the lower central series until it stabilises.
std::vector<std::size_t> lower_central_series_sizes(const Subgroup& h);
SubgroupFlags classify_subgroup(const Subgroup& h);

}  // namespace supergraphs
