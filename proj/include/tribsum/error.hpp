#pragma once

#include <stdexcept>
#include <string>

namespace tribsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A negative index was requested for a recurrence with t = 0, where the
/// backward extension does not exist.
class NegativeIndexWithZeroT : public Error {
 public:
  NegativeIndexWithZeroT()
      : Error("negative index requires t != 0 (backward recurrence undefined)") {}
};

class InvalidQuery : public Error {
 public:
  using Error::Error;
};

class MalformedRational : public Error {
 public:
  using Error::Error;
};

class UnknownSequence : public Error {
 public:
  explicit UnknownSequence(const std::string& key)
      : Error("unknown sequence '" + key + "'") {}
};

class MalformedBFile : public Error {
 public:
  using Error::Error;
};

class FetchFailed : public Error {
 public:
  using Error::Error;
};

class FixtureMissing : public Error {
 public:
  using Error::Error;
};

/// A closed-form value disagreed with the brute-force sum.
class SumMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace tribsum
