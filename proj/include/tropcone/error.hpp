#pragma once

#include <stdexcept>
#include <string>

namespace tropcone {

// The semiring zero -inf has no tropical multiplicative inverse.
struct InversionOfBottom : std::domain_error {
  InversionOfBottom() : std::domain_error("tropical inverse of -inf") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// build_Akl and friends require k in J1 and l in J2.
struct IndexNotInJ : std::invalid_argument {
  explicit IndexNotInJ(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

struct RowLengthMismatch : ParseError {
  RowLengthMismatch(const std::string& what, int line_)
      : ParseError(what, line_, 1) {}
};

}  // namespace tropcone
