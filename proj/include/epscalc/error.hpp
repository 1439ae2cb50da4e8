#pragma once

#include <stdexcept>
#include <string>

namespace epscalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in a theory, model or proof file.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

// Ill-typed term or formula, or a malformed context/sequent.
struct TypeError : Error {
  using Error::Error;
};

// Raised when the empty type must be interpreted in a model that is not
// the degenerate all-singleton one.
struct EmptyTypeViolation : Error {
  using Error::Error;
};

}  // namespace epscalc
