#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kouch {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad files, bad expressions, invalid
// germ data, non-witness decompositions).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Input is well formed but the requested quantity is outside what the
// library can compute (e.g. Milnor number of a multi-pair branch without an
// override).
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

// A Milnor-number oracle could not produce a value: non-isolated
// singularity, retry budget exhausted, or no stabilization below the cap.
class OracleError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed, or a mathematical invariant failed.
// Always a bug (or a wrong assumption), never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace kouch
