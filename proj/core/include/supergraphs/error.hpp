#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supergraphs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A GroupSpec (or a Cayley table inside one) does not describe a group.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// An operation precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A resource cap (Cayley-table size, symmetric-group degree, vertex count)
/// would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Distances were requested on a graph that is not connected.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// Default cap on the number of elements of a group stored as a Cayley table.
inline constexpr std::size_t kDefaultCayleyCap = 20000;

/// Cayley cap in effect: SUPERGRAPH_CAP from the environment when set to a
/// positive integer, otherwise kDefaultCayleyCap.
std::size_t cayley_cap();

}  // namespace supergraphs
