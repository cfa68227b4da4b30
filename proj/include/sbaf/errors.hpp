#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbaf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown argument or sentence identifier.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid framework (empty premises, duplicate ids, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Sentence set reaching outside Sent(A).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Raised before an exponential enumeration would exceed its size guard.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_is_counted, std::size_t actual, std::size_t cap, std::string flag)
      : Error(what_is_counted + " count " + std::to_string(actual) + " exceeds enumeration cap " +
              std::to_string(cap) + " (raise it with " + flag + ")"),
        actual_(actual),
        cap_(cap) {}

  std::size_t actual() const { return actual_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t actual_;
  std::size_t cap_;
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

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbaf
