#pragma once

#include <stdexcept>
#include <string>

namespace evunits {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds what the implementation supports (e.g. Eulerian order cap).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed custom verbal-scale definition. line() is 1-based; 0 when the
// error is not tied to a single line.
class ScaleParseError : public std::runtime_error {
 public:
  ScaleParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace evunits
