#pragma once

#include <stdexcept>
#include <string>

namespace eqtower {

// Malformed data: bad tables, non-canonical encodings, schema violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (width too small, bad range, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqtower
