#pragma once

#include <stdexcept>
#include <string>

namespace dea {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed CSV, unknown DMU names, invalid arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Anything that goes wrong while solving a model.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// The simplex hit its iteration cap. Distinct from infeasibility.
class IterationLimitError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Branch-and-bound ran out of nodes before proving optimality.
class NodeLimitError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A big-M switch was (nearly) tight, so the constant is too small for the data.
class SaturationError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A model precondition was violated (e.g. a projection that is not
/// Pareto-efficient was handed to the reference-set LP).
class PreconditionError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace dea
