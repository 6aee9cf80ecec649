#pragma once

#include <stdexcept>
#include <string>

namespace dcreg {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration: probabilities outside their domain, incompatible
// decorrelation probabilities, malformed experiment settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data: bad CSV, length mismatches.
class DataError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: solver non-convergence, no root in bracket.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A realized count used as a denominator is zero (all-treated draw, empty
// averaging subset, ...). Monte Carlo tallies catch this to mark a
// replication as failed instead of propagating NaN.
class DegenerateAssignmentError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A regression fit received an empty training subset.
class DegenerateSubsetError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A fitted function was trained on units outside the subset the estimator
// requires (e.g. a decorrelated fit that saw non-R units).
class InfoBarrierError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace dcreg
