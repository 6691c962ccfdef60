#pragma once

#include <stdexcept>
#include <string>

namespace oldsets {

/// Malformed graph construction request (self-loop, bad endpoint, order overflow).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Rejected graph6 record.
class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The graph has an isolated vertex or a pair of open twins, so no OLD set exists.
class NotLocatableError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace oldsets
