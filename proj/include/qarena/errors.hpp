#pragma once

#include <stdexcept>
#include <string>

namespace qarena {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible widths/dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// A parameter is outside its documented range.
struct ParameterError : Error {
  using Error::Error;
};

/// Problem size exceeds a hard construction cap.
struct CapacityError : Error {
  using Error::Error;
};

/// An object violates its own invariants (bad pmf, non-Hermitian matrix, ...).
struct ValidityError : Error {
  using Error::Error;
};

/// A trial/sample budget was exhausted before success.
struct BudgetError : Error {
  using Error::Error;
};

/// Game-protocol violation (wrong sample count, inconsistent round data).
struct ProtocolError : Error {
  using Error::Error;
};

/// A reduction's precondition turned out not to hold.
struct ReductionError : Error {
  using Error::Error;
};

/// Bad command line or config file.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace qarena
