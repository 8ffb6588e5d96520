#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsuper {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct UnsupportedRadical : Error {
  explicit UnsupportedRadical(const std::string& what)
      : Error("unsupported radical: " + what) {}
};

struct RingMismatch : Error {
  using Error::Error;
};

struct PoleError : Error {
  using Error::Error;
};

/// A computed identity that the construction relies on did not hold.
struct InternalError : Error {
  using Error::Error;
};

/// Lexical or syntax error in the expression language; `offset` is a byte
/// offset into the input text.
struct ParseError : Error {
  ParseError(std::size_t offset, const std::string& msg)
      : Error("parse error at offset " + std::to_string(offset) + ": " + msg),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace qsuper
