#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A family size or other numeric argument is below its admissible minimum.
class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// An edge operand that is not an edge of the graph.
class InvalidEdge : public Error {
public:
  using Error::Error;
};

/// A vertex id outside 0..n-1.
class VertexOutOfRange : public Error {
public:
  using Error::Error;
};

/// Raised when a graph has an isolated vertex; total domination is undefined there.
class IsolatedVertex : public Error {
public:
  using Error::Error;
};

/// An explicit size cap was exceeded (solver order, oracle order, enumeration order).
class ResourceGuard : public Error {
public:
  using Error::Error;
};

/// A coloring whose domain or range does not match the graph it is applied to.
class DomainMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed text input (edge lists, DIMACS, certificates, family specs).
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace tdc
