#pragma once

#include <stdexcept>
#include <string>

namespace sgisect {

// Base class for every error raised by the library. The CLI maps all of
// these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or an out-of-range index.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called outside its domain (e.g. a solver whose variety
// precondition does not hold).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (product size, state count, word length,
// enumeration bound) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sgisect
