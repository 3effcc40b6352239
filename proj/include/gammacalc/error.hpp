#pragma once

#include <stdexcept>
#include <string>

namespace gammacalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown labels, bad JSON, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates an operation's precondition
/// (e.g. gamma of a non-reciprocal polynomial).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or matrix size exceeds a configured cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric routine hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A psi-polynomial that has no cd-expression; carries the offending monomial.
class NotCdExpressible : public Error {
 public:
  explicit NotCdExpressible(std::string witness)
      : Error("not cd-expressible: no solution matches monomial '" + witness + "'"),
        witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace gammacalc
