#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

/// A parameter lies outside the domain of a formula or construction.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input. `line()` is 1-based, or 0 when the text did not
/// come from a stream.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace extremal
