#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rolestat {

// Base for every error the library reports. The CLI maps each kind to an
// exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file or stream could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input was readable but does not follow the expected format. `line` is
// 1-based and 0 when not applicable.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid arguments to an operation (bad k, empty query, too few roles ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace rolestat
