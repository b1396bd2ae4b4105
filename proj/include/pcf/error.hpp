#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcf {

// Root of every exception the library throws. The C API maps subclasses onto
// status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Some application is ill-typed, in combinatory or surface syntax.
class TypeError : public Error {
 public:
  using Error::Error;
};

// A base-type observation was requested of a term whose type is not iota.
class WrongType : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnboundVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class InvalidTree : public Error {
 public:
  using Error::Error;
};

class IndexMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace pcf
