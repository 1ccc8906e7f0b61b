#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace romandom {

/// Malformed graph6 / edge-list / labeling text. `position()` is a byte
/// offset for graph6 and labelings, a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An instance exceeds a configured solver or input limit.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (e.g. a construction's parameter
/// range, malformed subgraph lists).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace romandom
