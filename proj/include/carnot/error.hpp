#pragma once

#include <stdexcept>
#include <string>

namespace carnot {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, literals, dimensions).
class input_error : public error {
 public:
  using error::error;
};

/// An operation was called outside its documented domain.
class precondition_error : public error {
 public:
  using error::error;
};

/// A postcondition failed; indicates a bug rather than bad input.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace carnot
