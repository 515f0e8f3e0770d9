#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scindex {

/// Base of every error raised by the engine. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two quantities of different dimension were added or compared.
class HeterogeneityError : public Error {
 public:
  using Error::Error;
};

/// A value outside an operation's domain (zero divisor, eta outside (0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyPortfolioError : public Error {
 public:
  EmptyPortfolioError() : Error("empty portfolio: at least one paper is required") {}
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& name)
      : Error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected +
              ", found " + found),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A log-log fit was asked of a series that cannot be fitted.
class DegenerateSeriesError : public Error {
 public:
  using Error::Error;
};

class ZeroVarianceError : public Error {
 public:
  explicit ZeroVarianceError(const std::string& column)
      : Error("column '" + column + "' has zero variance"), column_(column) {}
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

class UnknownIndicatorError : public Error {
 public:
  explicit UnknownIndicatorError(const std::string& name)
      : Error("unknown indicator '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed input file. line() is 1-based; for JSON input it is the record index + 1.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NegativeCountError : public FormatError {
 public:
  NegativeCountError(std::size_t line, const std::string& token)
      : FormatError(line, "negative citation count '" + token + "'") {}
};

class NonPositivePointError : public Error {
 public:
  using Error::Error;
};

}  // namespace scindex
