#pragma once

#include <stdexcept>
#include <string>

namespace sdsc {

// Bad parameter values or semantically invalid inputs. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// File system and parse failures. CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, not bad input. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sdsc
