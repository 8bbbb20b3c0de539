#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace korobov {

// Parameter outside the domain where an operation is defined (alpha <= 1 for
// kernel operations, divergent series, alpha = 0 enumeration, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

// A configured cap was exceeded or the requested configuration cannot be
// realised at the available scale.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace korobov
