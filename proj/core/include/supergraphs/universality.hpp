#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supergraphs/graph.hpp"
#include "supergraphs/group.hpp"
#include "supergraphs/permutation.hpp"
#include "supergraphs/supergraph.hpp"

namespace supergraphs {

/// Largest symmetric-group degree handled by explicit scans.
inline constexpr std::size_t kMaxSymmetricDegree = 13;
/// Up to this degree nilpotent/solvable decisions enumerate <x, y>.
inline constexpr std::size_t kClosureDegree = 9;
/// Largest order enumerated when an order certificate does not apply.
inline constexpr std::uint64_t kClosureFallbackOrder = 1000000;

std::vector<std::uint64_t> primes_first(std::size_t n);
bool is_prime(std::uint64_t n);

/// Solvability and nilpotency of <gens> by explicit element closure.
struct PermGroupFacts {
  std::uint64_t order = 0;
  bool solvable = false;
  bool nilpotent = false;
};
PermGroupFacts perm_group_facts(std::size_t degree, const std::vector<Permutation>& gens,
                                std::uint64_t limit = kClosureFallbackOrder);

struct ClassAdjacencyOptions {
  /// Hold the longer cycle fixed and scan the class of the shorter one;
  /// otherwise the reverse.
  bool fix_longer = true;
  /// Examine every candidate even after an adjacent one is found.
  bool exhaustive = false;
};

struct ClassAdjacency {
  std::size_t degree = 0;
  std::uint64_t p = 0, q = 0;
  AdjacencyKind kind = AdjacencyKind::commuting;
  bool adjacent = false;
  /// Size of the scanned class.
  std::size_t candidates = 0;
  std::size_t examined = 0;
  std::size_t commuting_candidates = 0;
  /// "scan", "closure", "order-certificate" or "arithmetic"; mixed methods are
  /// joined with '+'.
  std::string method;
  /// Orders of <x, y> over examined non-commuting candidates (nilpotent/solvable).
  std::map<std::string, std::size_t> generated_orders;
  std::optional<Permutation> fixed, witness;
};

/// Adjacency of the p-cycle and q-cycle classes of S_N in the compressed
/// conjugacy super-kind graph, by scanning one class against a fixed cycle.
/// kind must be commuting, enhanced, nilpotent or solvable; p != q primes.
/// Throws CapExceeded for N > kMaxSymmetricDegree.
ClassAdjacency class_adjacency(std::size_t degree, std::uint64_t p, std::uint64_t q, AdjacencyKind kind,
                               ClassAdjacencyOptions options = {});

struct Step3Result {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<std::uint64_t> primes;
  bool with_nonedge = true;
  /// Vertex i is the class of p_i-cycles, labelled "<p>-cycles".
  Graph graph;
  std::vector<ClassAdjacency> pairs;  // i < j, lexicographic
  bool arithmetic_only = false;
};

/// Degree used by the construction: p_{n-1} + p_n - 1, or p_{n-1} + p_n for K_n.
std::size_t step3_degree(const std::vector<std::uint64_t>& primes, bool with_nonedge);

/// The classes of p_i-cycles for the given increasing primes in S_N. With
/// `arithmetic_only` (required above the degree cap) pairs are decided by
/// p + q <= N without scanning.
Step3Result step3_embedding(const std::vector<std::uint64_t>& primes, AdjacencyKind kind, bool with_nonedge,
                            bool arithmetic_only = false);
/// Same with the first n primes; throws CapExceeded naming n above the cap.
Step3Result step3_embedding(std::size_t n, AdjacencyKind kind, bool with_nonedge);

struct EmbeddingFactor {
  std::optional<Edge> nonedge;  // empty for the complete-target factor
  std::vector<std::uint64_t> primes;
  std::size_t degree = 0;
  /// Cycle length (prime) carried by each target vertex.
  std::vector<std::uint64_t> vertex_primes;
  Graph factor_graph;  // on the target's labels
  bool arithmetic_only = false;
  std::string method;
};

struct EmbeddingCertificate {
  Graph target;
  AdjacencyKind kind = AdjacencyKind::commuting;
  std::vector<EmbeddingFactor> factors;
  Graph final_graph;
  std::vector<Vertex> witness;  // target vertex -> final_graph vertex
  bool diagonal_checked = false;
  bool diagonal_matches = false;
  /// Enhanced embeddings only: prime sets pairwise disjoint and the
  /// coordinate orders of every adjacent pair pairwise coprime.
  bool coprime_check = false;
  bool arithmetic_only = false;
  bool verified = false;
};

struct EmbedOptions {
  /// Above the degree cap decide adjacency by p + q <= N instead of failing.
  bool allow_arithmetic_only = false;
  /// Largest iterated strong product (vertex count) built to check the diagonal.
  std::size_t diagonal_limit = 4096;
};

/// Realises `target` (n >= 3 vertices) as an intersection of K_n - e factors,
/// one per nonedge, each from step3_embedding with the nonedge carried by
/// the two largest primes. kind is commuting, nilpotent or solvable.
EmbeddingCertificate embed_graph(const Graph& target, AdjacencyKind kind, EmbedOptions options = {});

/// Enhanced-power variant: each factor uses its own block of n primes, blocks
/// pairwise disjoint (default: consecutive blocks of the prime sequence).
EmbeddingCertificate enhanced_embed(const Graph& target, EmbedOptions options = {});
/// Caller-chosen prime sets, one per nonedge in edge order. Throws
/// InvalidArgument when the sets overlap or are malformed.
EmbeddingCertificate enhanced_embed(const Graph& target, const std::vector<std::vector<std::uint64_t>>& prime_sets,
                                    EmbedOptions options = {});

struct StrongProductCheck {
  Graph direct;   // compressed graph of G x H
  Graph product;  // strong product of the factors' compressed graphs
  std::vector<Vertex> witness;  // class (x,y)^G -> (x^G, y^G)
  bool holds = false;
};

/// Compares the compressed conjugacy super-kind graph of G x H with the
/// strong product of those of G and H under the class-pairing map.
StrongProductCheck strong_product_identity_check(const GroupSpec& a, const GroupSpec& b, AdjacencyKind kind);

}  // namespace supergraphs
