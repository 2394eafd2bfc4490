#ifndef RNASHAPE_ERRORS_H_
#define RNASHAPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rnashape {

// Base for every error raised by the library. The CLI maps each subclass to a
// distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed diagram text. Line and column are 1-based; column 0 means the
// whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An operation was handed an input outside its domain (e.g. theta on a
// B-shape, strip_plants on an unplanted diagram).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search or tabulation exceeded its configured bound.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold exactly did not (e.g. non-zero remainder when
// dividing a shape polynomial by 1+z, or a corrupted table cache).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rnashape

#endif  // RNASHAPE_ERRORS_H_
