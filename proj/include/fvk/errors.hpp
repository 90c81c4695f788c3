#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fvk {

// Sequence length does not match the grid or operator it is used with.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its documented range.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a stated precondition (admissibility, constraint feasibility, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Grid too coarse for the requested operation.
struct ResolutionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A closed-form construction could not be completed (root bracketing failed,
// infeasible geometry, ...).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value met during iteration; carries the offending point.
struct NumericError : std::runtime_error {
  std::vector<double> iterate;
  NumericError(const std::string& what, std::vector<double> it)
      : std::runtime_error(what), iterate(std::move(it)) {}
};

// Iteration budget or penalty cap exhausted without meeting tolerances.
struct ConvergenceError : std::runtime_error {
  std::vector<double> last_iterate;
  double residual = 0.0;
  ConvergenceError(const std::string& what, std::vector<double> it, double res)
      : std::runtime_error(what), last_iterate(std::move(it)), residual(res) {}
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fvk
