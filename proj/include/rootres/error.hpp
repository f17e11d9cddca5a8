#pragma once

#include <stdexcept>
#include <string>

namespace rootres {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad degree, unknown name, parse
// failure, unmet operation precondition).
class InputError : public Error {
 public:
  using Error::Error;
};

// A group closure grew past the configured order cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_count_(partial) {}
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// A hypothesis needed by a construction fails on the given instance (for
// example a syllable with no closedness witness). Not a bug.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

// A check that must hold by a theorem did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A certificate payload could not be parsed into the expected shape.
class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace rootres
