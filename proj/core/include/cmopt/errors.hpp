#pragma once

#include <stdexcept>
#include <string>

namespace cmopt {

// Input file is malformed; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive enumeration would exceed its configured cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure distinct from a well-posed negative answer.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmopt
