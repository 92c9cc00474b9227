#include "supergraphs/permutation.hpp"

#include <numeric>
#include <sstream>

#include "supergraphs/error.hpp"

namespace supergraphs {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw InvalidArgument("image vector is not a permutation");
    }
    hit[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int p = cyc[i];
      if (p < 1 || static_cast<std::size_t>(p) > degree) {
        throw InvalidSpec("cycle point " + std::to_string(p) + " outside 1.." +
                          std::to_string(degree));
      }
      if (used[p - 1]) throw InvalidSpec("cycles are not disjoint");
      used[p - 1] = true;
      images[p - 1] = static_cast<Point>(cyc[(i + 1) % cyc.size()] - 1);
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t degree, const std::vector<Point>& points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidArgument("permutation degrees differ");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<Permutation::Point> Permutation::support() const {
  std::vector<Point> out;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) out.push_back(static_cast<Point>(x));
  }
  return out;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

}  // namespace supergraphs
