#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groundkit {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct UnknownVertexError : Error {
  using Error::Error;
};

struct UnknownArcError : Error {
  using Error::Error;
};

// Pie/Dome++ are undefined on arcs of A^<->.
struct BidirectionalArcError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

// Malformed text input (arc lists, PENMAN, JSONL, stoplists).
struct ParseError : Error {
  enum class Kind {
    Syntax,
    DuplicateInstance,
    DanglingVariable,
    MultipleRoots,
    Cycle,
    NotRooted,
    Format,
  };

  ParseError(Kind k, const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(locate(msg, line, column)), kind(k), line(line), column(column) {}

  Kind kind;
  std::size_t line;    // 1-based, 0 = unknown
  std::size_t column;  // 1-based, 0 = unknown

private:
  static std::string locate(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    return msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
};

// AMR definition entry cannot be repaired or used where a valid one is required.
struct UnpatchableError : Error {
  using Error::Error;
};

struct InvalidEntryError : Error {
  using Error::Error;
};

}  // namespace groundkit
