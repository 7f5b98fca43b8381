#pragma once

#include <stdexcept>
#include <string>

namespace hyperhelm {

// Argument outside the mathematical domain of an operation (z = 0 for a
// singular function, d = 2 for Funk-Hecke, exterior expansion at r = 0...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Result is not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Linear system could not be solved to the requested accuracy.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperhelm
