#pragma once

#include <stdexcept>
#include <string>

namespace symcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition text, size mismatch, out-of-range n.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A class function that was expected to be a character decomposed with a
/// negative or fractional multiplicity.
class NotACharacter : public Error {
 public:
  using Error::Error;
};

/// A character table failed orthogonality (computed or loaded).
class TableError : public Error {
 public:
  using Error::Error;
};

/// Cache file could not be read back or repaired.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcover
