#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arithmos {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input string is not the flattening of a formula. position is 1-based.
struct NotWellFormed : Error {
  std::size_t position;
  NotWellFormed(const std::string& what, std::size_t pos)
      : Error(what + " at symbol " + std::to_string(pos)), position(pos) {}
};

/// Surface text rejected. position is a 0-based byte offset.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
};

struct CaptureError : Error {
  using Error::Error;
};
struct NotASequenceCode : Error {
  using Error::Error;
};
struct ZeroInput : Error {
  using Error::Error;
};
/// A number would have to be materialized (or compared) beyond what fits in memory.
struct TooLarge : Error {
  using Error::Error;
};
struct LiteralInfeasible : Error {
  using Error::Error;
};
struct NotAFormulaCode : Error {
  using Error::Error;
};
struct NotAClassExpression : Error {
  using Error::Error;
};
struct WrongFreeVariables : Error {
  using Error::Error;
};
struct IdentityViolation : Error {
  using Error::Error;
};
struct EmptyArray : Error {
  using Error::Error;
};
struct ArityError : Error {
  using Error::Error;
};

struct LineParseError : Error {
  std::size_t line;
  LineParseError(const std::string& what, std::size_t ln)
      : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};
struct JustificationFailed : Error {
  std::size_t line;
  JustificationFailed(const std::string& what, std::size_t ln)
      : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

}  // namespace arithmos
