#pragma once

#include <stdexcept>
#include <string>

namespace uforge {

// Error taxonomy shared across the library. The CLI maps ConfigError,
// ArgumentError, CapacityError, FormulaDomainError and InconsistentInputError
// to exit code 2; TheoremViolation surfaces as a failed check (exit code 1).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unsupported configuration: field parameters, catalog orders, CLI usage.
struct ConfigError : Error {
  using Error::Error;
};

// Invalid argument to a library operation.
struct ArgumentError : Error {
  using Error::Error;
};

// Multiplicative inverse of zero requested.
struct DivisionByZeroError : Error {
  using Error::Error;
};

// An enumeration or materialization request exceeds a hard bound; the
// message names the bound.
struct CapacityError : Error {
  using Error::Error;
};

// A closed-form evaluation left its proven domain (non-integer multiplicity,
// negative count); carries a diagnostic with the offending values.
struct FormulaDomainError : Error {
  using Error::Error;
};

// Input data that no admissible configuration can produce.
struct InconsistentInputError : Error {
  using Error::Error;
};

// Data contradicting a uniqueness guarantee. Never silently resolved; the
// message lists every witness.
struct TheoremViolation : Error {
  using Error::Error;
};

// An internal cross-check between two routes to the same value failed.
struct InternalCheckError : Error {
  using Error::Error;
};

}  // namespace uforge
