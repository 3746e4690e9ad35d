#pragma once

#include <stdexcept>
#include <string>

namespace liftplan {

// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Root finding failed to bracket or converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested lift height has no finite catenary solution (z1 >= L or below 0).
class HeightOutOfRange : public SolverError {
 public:
  using SolverError::SolverError;
};

// Invalid request or configuration (step too large, empty ranges, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace liftplan
