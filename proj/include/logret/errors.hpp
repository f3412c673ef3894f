#pragma once

#include <stdexcept>
#include <string>

namespace logret {

// Invalid configuration or spec values. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A ratio whose denominator is empty or zero (no baseline bytes, no queries
// satisfied, ...). Maps to CLI exit code 1.
class UndefinedRatioError : public std::runtime_error {
 public:
  explicit UndefinedRatioError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (bad header, bad record in strict mode).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line_number = 0)
      : std::runtime_error(what), line_number_(line_number) {}
  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

// Unreadable or unwritable source/sink.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logret
