#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cxrep {

/// Input outside the domain of an operation (non-finite component, etc.).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact result does not fit in 128 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A representation value that no pair of 64-bit naturals maps to.
class MalformedCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not match the expected grammar. `offset` is the zero-based
/// character position where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cxrep
