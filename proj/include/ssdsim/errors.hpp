#pragma once

#include <stdexcept>
#include <string>

namespace ssdsim {

// Argument outside the mathematical domain of a timing or energy equation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A chip or channel was asked to do something its state does not allow.
class SchedulingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input: bad config values, traces, plans.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ssdsim
