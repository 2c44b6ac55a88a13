#pragma once

#include <stdexcept>
#include <string>

namespace fairstream {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ItemId outside the ground set [0, n).
class InvalidItemError : public Error {
 public:
  using Error::Error;
};

/// An item was committed into a selection that already contains it.
class DuplicateItemError : public Error {
 public:
  using Error::Error;
};

/// Budgets cannot be satisfied (k > n, or some k_i > |V_i|).
class InfeasibleBudgetError : public Error {
 public:
  using Error::Error;
};

/// A second pass was requested from a forward-only stream.
class ReplayUnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The same stream item was fed to a single-pass algorithm twice.
class DuplicateProcessingError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search was asked to enumerate more states than its guard allows.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// A data file failed to parse; message carries path and line number.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside its documented range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A group partition cannot be formed (fewer items than groups).
class DegeneratePartitionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairstream
