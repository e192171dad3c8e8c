#pragma once

#include <stdexcept>
#include <string>

namespace fvc {

// Malformed queries, malformed instances, infeasible parameters.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-text errors; carries the 1-based line the problem was found on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace fvc
