#pragma once

#include <stdexcept>
#include <string>

namespace sa {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input data, parameters, or preconditions. The CLI maps these to
// exit code 2; everything else derived from Error maps to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Rows of a matrix (or query vs. reference) disagree on dimensionality.
class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Label vector length does not match the trace row count.
class LabelCountMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A trace contains NaN or infinity.
class NonFiniteValueError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Generic parameter/range violation.
class ValueError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Input file missing or unreadable.
class IoError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// File exists but does not parse under the declared format.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// DSA asked of a training set with fewer than two predicted classes.
class SingleClassError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A query's predicted class has no training traces.
class MissingClassError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// KDE fit found no dimension with variance above the threshold.
class NoInformativeDimensionsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Per-class sampling hit a class whose traces cannot support a KDE fit.
class DegenerateClassError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Two training traces with different predicted labels are identical, so the
// DSA denominator vanishes. Indicates corrupt training data.
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// calc was invoked before prep.
class NotPreparedError : public Error {
 public:
  using Error::Error;
};

// Cached state does not match the supplied training set.
class FingerprintMismatchError : public Error {
 public:
  using Error::Error;
};

// No cache entry stored under the requested name.
class CacheMissError : public Error {
 public:
  using Error::Error;
};

// Cache entry exists but fails header or checksum validation.
class CacheCorruptError : public Error {
 public:
  using Error::Error;
};

}  // namespace sa
