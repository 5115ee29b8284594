#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace peaknet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text that does not conform to the scenes or alias format.
// line() is 1-based and always set.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Out-of-range or inconsistent parameters passed to a generator or analysis.
class ParamError : public Error {
 public:
  using Error::Error;
};

// A node name (or id) that is not present in the graph.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace peaknet
