#ifndef FDM_ERRORS_HPP
#define FDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdm {

// Base for all toolkit failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad domain input: dimension mismatches, range violations, degenerate
// matrices. Maps to CLI exit status 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. Carries a 1-based row/column position when known.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, int row, int col)
      : ValidationError(msg + " (row " + std::to_string(row) + ", column " +
                        std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  explicit ParseError(const std::string& msg)
      : ValidationError(msg), row_(0), col_(0) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

// Filesystem failure. Maps to CLI exit status 3.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace fdm

#endif  // FDM_ERRORS_HPP
