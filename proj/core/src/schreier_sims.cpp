#include "supergraphs/schreier_sims.hpp"

#include <algorithm>

#include "supergraphs/error.hpp"

namespace supergraphs {

namespace {

bool fixes_all(const Permutation& g, const std::vector<Permutation::Point>& points) {
  return std::all_of(points.begin(), points.end(), [&](auto b) { return g[b] == b; });
}

Permutation::Point first_moved(const Permutation& g) {
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (g[x] != x) return static_cast<Permutation::Point>(x);
  }
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  std::vector<Point> base;
  for (const auto& g : gens) {
    if (fixes_all(g, base)) base.push_back(first_moved(g));
  }
  for (std::size_t l = 0; l < base.size(); ++l) {
    Level level;
    level.base_point = base[l];
    std::vector<Point> prefix(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(l));
    for (const auto& g : gens) {
      if (fixes_all(g, prefix)) level.generators.push_back(g);
    }
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }
  complete();
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(degree_, Permutation());
  level.in_orbit.assign(degree_, false);
  level.transversal[level.base_point] = Permutation(degree_);
  level.in_orbit[level.base_point] = true;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point p = level.orbit[k];
    for (const auto& x : level.generators) {
      Point q = x[p];
      if (!level.in_orbit[q]) {
        level.in_orbit[q] = true;
        level.transversal[q] = level.transversal[p] * x;
        level.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(const Permutation& g,
                                                           std::size_t from) const {
  Permutation h = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Point beta = h[levels_[l].base_point];
    if (!levels_[l].in_orbit[beta]) return {h, l};
    h = h * levels_[l].transversal[beta].inverse();
  }
  return {h, levels_.size()};
}

void StabilizerChain::complete() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    // Copy: the loop body may grow deeper levels, never this one.
    const Level level = levels_[static_cast<std::size_t>(i)];
    for (Point p : level.orbit) {
      for (const auto& x : level.generators) {
        Point q = x[p];
        Permutation s = level.transversal[p] * x * level.transversal[q].inverse();
        if (s.is_identity()) continue;
        auto [h, j] = strip(s, static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved(h);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<StabilizerChain::Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

BigInt perm_group_order(std::size_t degree, std::span<const Permutation> gens) {
  return StabilizerChain(degree, gens).order();
}

}  // namespace supergraphs
