#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fp5 {

// Bad input data: out-of-range grades, constraint violations, universe
// mismatches, unbound variables. The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point drift exceeded the internal consistency budget. Indicates
// a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Expression syntax error with a byte offset and a description of what a
// valid continuation would have been.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace fp5
