#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "supergraphs/permutation.hpp"

namespace supergraphs {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set of a permutation group, built with the
/// deterministic Schreier-Sims algorithm. No group element is enumerated, so
/// groups such as S_11 or A_13 are cheap.
class StabilizerChain {
 public:
  using Point = Permutation::Point;

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  BigInt order() const;
  bool contains(const Permutation& g) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // transversal[p] maps base_point to p; empty slot when p is not in the orbit.
    std::vector<Permutation> transversal;
    std::vector<bool> in_orbit;
  };

  void rebuild_orbit(Level& level) const;
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from) const;
  void complete();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Exact order of the group generated by `gens` acting on `degree` points.
BigInt perm_group_order(std::size_t degree, std::span<const Permutation> gens);

}  // namespace supergraphs
