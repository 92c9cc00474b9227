#include "supergraphs/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace supergraphs {

std::size_t cayley_cap() {
  const char* raw = std::getenv("SUPERGRAPH_CAP");
  if (raw == nullptr) return kDefaultCayleyCap;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultCayleyCap;
  return value;
}

}  // namespace supergraphs
