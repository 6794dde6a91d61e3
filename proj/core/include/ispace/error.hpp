#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ispace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested enumeration exceeds its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a space that does not meet its stated hypothesis.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// Malformed input to a model builder (duplicates, dimension mismatch, disconnected graph, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Text-format parse failure; line is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ispace
