#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepmatch {

// Malformed textual input (graph6, multigraph text). Carries the byte offset
// of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An operation was called outside its domain (wrong graph class, size bound
// exceeded, invalid matching). `reason()` is a short machine-readable tag
// such as "not_cubic" or "disconnected".
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string reason, const std::string& detail)
      : std::invalid_argument(reason + ": " + detail),
        reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

// A constructive step produced something that violates a proven invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sepmatch
