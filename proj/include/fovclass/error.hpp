#pragma once

#include <stdexcept>
#include <string>

namespace fovclass {

/// Malformed textual input (Snellen fractions, spec documents, labels).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value violates a type invariant (display specs, models, configs).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// RDF efficiency over a range with no display cycles.
class UndefinedEfficiency : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fovclass
