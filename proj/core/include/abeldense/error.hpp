#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abeldense {

// Malformed or mismatched input: wrong dimensions, mixed symbol bases,
// violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A nonzero symbolic value whose float shadow lies inside the sign dead zone.
class AmbiguousSign : public std::runtime_error {
 public:
  AmbiguousSign(const std::string& what, double shadow)
      : std::runtime_error(what), shadow_(shadow) {}
  double shadow() const noexcept { return shadow_; }

 private:
  double shadow_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), detail_(what), line_(line), column_(column) {}
  // Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what + " (column " + std::to_string(column) + ")";
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// A bounded search exhausted its budget.
class NotFound : public std::runtime_error {
 public:
  NotFound(const std::string& what, unsigned long long bound)
      : std::runtime_error(what), bound_(bound) {}
  unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long bound_;
};

}  // namespace abeldense
