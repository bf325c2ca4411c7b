#pragma once

#include <stdexcept>
#include <string>

namespace gpm {

/// Malformed textual input (edge lists, pattern specs). Maps to CLI exit 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary cache with the wrong magic/version or inconsistent contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or truncated files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid combination of options (e.g. IEP with listing).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A planner or engine invariant was violated. Maps to CLI exit 1.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace gpm
