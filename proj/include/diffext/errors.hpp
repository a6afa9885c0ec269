#pragma once

#include <stdexcept>
#include <string>

namespace diffext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero denominator or inversion of the zero element.
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Operands live over different variable counts, or a tuple has the wrong length.
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

// Matrix dimensions do not fit the requested operation.
struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
  NotInvertible() : Error("matrix is not invertible") {}
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

// A cochain value does not match its declared coefficient module.
struct ModuleMismatch : Error {
  explicit ModuleMismatch(const std::string& what) : Error(what) {}
};

// Elements of central extensions built from different cocycles were mixed.
struct IncompatibleExtension : Error {
  explicit IncompatibleExtension(const std::string& what) : Error(what) {}
};

struct NotInSL2 : Error {
  explicit NotInSL2(const std::string& what) : Error(what) {}
};

// A matrix claimed to lie in the flag-preserving group P does not.
struct NotInP : Error {
  explicit NotInP(const std::string& what) : Error(what) {}
};

// Malformed textual input (rational function or derivation spec).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace diffext
