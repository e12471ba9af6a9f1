#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfsub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact search ran out of its node, time or vertex allowance.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class NotTriangleFree : public Error {
 public:
  using Error::Error;
};

class NotMaximalTriangleFree : public Error {
 public:
  using Error::Error;
};

/// A witness vertex is reused for two different pairs.
class InconsistentWitnesses : public Error {
 public:
  using Error::Error;
};

/// A lifting precondition does not hold. `condition()` is 'a', 'b' or 'c':
/// (a) the branch set is not stable, (b) the used witnesses are not stable,
/// (c) a witness is not adjacent to exactly its two branch vertices.
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(char condition, const std::string& what)
      : Error(what), condition_(condition) {}
  char condition() const noexcept { return condition_; }

 private:
  char condition_;
};

/// Malformed graph file. `offset()` is the byte offset of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed file that encodes an invalid edge (self-loop, duplicate, out of range).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfsub
