#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lly {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to a graph constructor (self-loop, endpoint out of range).
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Malformed graph6 text. `offset` is the byte position of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An operation was called outside its domain (non-edge, isolated vertex, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The graph is disconnected where connectivity is required. Carries one
/// vertex from each of two different components.
class DisconnectedError : public DomainError {
public:
  DisconnectedError(int a, int b)
      : DomainError("graph is disconnected: vertices " + std::to_string(a) + " and " +
                    std::to_string(b) + " lie in different components"),
        a_(a), b_(b) {}
  int first() const noexcept { return a_; }
  int second() const noexcept { return b_; }

private:
  int a_, b_;
};

/// A self-check failed. Never caught internally.
class InternalError : public Error {
public:
  using Error::Error;
};

/// Negative answer of a recognition routine, with a concrete witness.
struct Rejection {
  std::string reason;
  std::vector<int> witness;
};

}  // namespace lly
