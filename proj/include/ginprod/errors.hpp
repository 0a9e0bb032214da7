#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ginprod {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside a function's mathematical domain.
class DomainError : public Error {
  using Error::Error;
};

/// Evaluator or contour parameters rejected at construction.
class ConfigurationError : public Error {
  using Error::Error;
};

/// A series or quadrature stopped before reaching its tolerance.
/// Carries the partial result and the achieved error bound.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial, double bound)
      : Error(what), partial_result(partial), error_bound(bound) {}
  double partial_result;
  double error_bound;
};

/// Numerical failure in sampling or linear algebra; carries the
/// offending Monte Carlo stream index when applicable.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what, std::uint64_t stream = 0)
      : Error(what), stream_index(stream) {}
  std::uint64_t stream_index;
};

/// Too little data for a statistical estimate.
class StatisticsError : public Error {
  using Error::Error;
};

/// Invalid arguments to an estimator.
class ArgumentError : public Error {
  using Error::Error;
};

}  // namespace ginprod
