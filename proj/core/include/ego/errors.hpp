#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ego {

/// Malformed input text. Carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that violates a data invariant (bad weight, bad parameter).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownNodeError : public std::runtime_error {
 public:
  explicit UnknownNodeError(std::string node)
      : std::runtime_error("unknown node '" + node + "'"), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

}  // namespace ego
