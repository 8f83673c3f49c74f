#pragma once

#include <stdexcept>
#include <string>

namespace topicmetrics {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad K, mismatched shapes, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data is unreadable or malformed.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace topicmetrics
