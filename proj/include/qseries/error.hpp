#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Base of every error raised by the library. The CLI maps the concrete type
// to the "kind" field of its stderr JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Operands carry different moduli, or a modulus is not an admissible prime.
class ModulusError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "modulus"; }
};

// An operation would read a coefficient beyond the known precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

// A negative shift met a nonzero low-order coefficient.
class DivisibilityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "divisibility"; }
};

class NonUnitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "non_unit"; }
};

// Argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

// A request exceeds the configured partition-table budget.
class BudgetError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

// Malformed ".fps" file or claims file.
class FormatError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "format"; }
};

}  // namespace qseries
