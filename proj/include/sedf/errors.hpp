#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sedf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input (self-loop, vertex out of range, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search routine refused an input larger than its configured edge capacity.
class CapacityError : public Error {
 public:
  CapacityError(int edges, int capacity)
      : Error("graph has " + std::to_string(edges) + " edges, capacity is " +
              std::to_string(capacity)),
        edges_(edges),
        capacity_(capacity) {}

  int edges() const { return edges_; }
  int capacity() const { return capacity_; }

 private:
  int edges_;
  int capacity_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sedf
