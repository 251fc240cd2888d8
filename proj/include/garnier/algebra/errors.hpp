#pragma once

#include <stdexcept>
#include <string>

namespace garnier {

// Zero denominators, degenerate parameters and violated preconditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An evaluation point hit a zero of a denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'") {}
};

}  // namespace garnier
