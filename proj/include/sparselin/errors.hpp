#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparselin {

// Base of every error the library throws. Errors raised while reading a text
// stream carry the 1-based line number; line() is 0 otherwise.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DimensionError : public Error {
  using Error::Error;
};

class EmptyDatasetError : public Error {
  using Error::Error;
};

class LabelError : public Error {
  using Error::Error;
};

class NonFiniteError : public Error {
  using Error::Error;
};

class ParseError : public Error {
  using Error::Error;
};

class IndexOrderError : public Error {
  using Error::Error;
};

class FormatError : public Error {
  using Error::Error;
};

class ConfigError : public Error {
  using Error::Error;
};

}  // namespace sparselin
