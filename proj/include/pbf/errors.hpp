#pragma once

#include <stdexcept>
#include <string>

namespace pbf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A point or probability lies outside its admissible domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Operands disagree on the number of players.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A value table violates its structural invariants (length, finiteness).
class ValidationError : public Error {
public:
  using Error::Error;
};

class InvalidCoefficients : public Error {
public:
  using Error::Error;
};

/// The function has (numerically) zero standard deviation.
class DegenerateFunction : public Error {
public:
  using Error::Error;
};

class EmptySubset : public Error {
public:
  using Error::Error;
};

class IncompleteTable : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pbf
