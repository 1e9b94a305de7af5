#pragma once

#include <stdexcept>
#include <string>

namespace alphar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or parameter-range violation. The CLI maps it to exit code 2.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its node budget. The CLI maps it to exit code 3.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { kEmpty, kBadHeader, kBadCharacter, kBadLength, kTrailingBits, kTooLarge, kBadEdgeList };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace alphar
