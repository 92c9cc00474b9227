#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace supergraphs {

/// A permutation of {0, ..., degree-1} stored as its image vector.
///
/// Products apply the left operand first: (p * q)(x) = q(p(x)). Conjugation
/// follows the same convention, x^g = g^-1 * x * g.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles written with 1-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// A single cycle on the given 0-based points.
  static Permutation cycle(std::size_t degree, const std::vector<Point>& points);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;
  Permutation pow(std::uint64_t k) const;

  bool is_identity() const noexcept;
  std::uint64_t order() const;
  std::vector<Point> support() const;
  /// Nontrivial cycles as 0-based point lists, each starting at its minimum.
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation with 1-based points, "e" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Commutator [x, y] = x^-1 y^-1 x y.
Permutation commutator(const Permutation& x, const Permutation& y);

}  // namespace supergraphs
