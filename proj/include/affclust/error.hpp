#pragma once

#include <stdexcept>
#include <string>

namespace affclust {

// Base for all library errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (parse failures, bad headers, truncated data).
struct FormatError : Error {
  using Error::Error;
  FormatError(const std::string& path, size_t line, const std::string& msg)
      : Error(path + ":" + std::to_string(line) + ": " + msg) {}
};

// Structurally valid input that violates a contract (alignment, range,
// out-of-extent, bad configuration).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace affclust
