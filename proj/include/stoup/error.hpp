#pragma once

#include <stdexcept>
#include <string>

namespace stoup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Concrete syntax problem; `position` is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Connective or rule used outside the profile that enables it.
struct ProfileError : Error {
  using Error::Error;
};

// A derivation does not check against its claimed sequent.
struct CheckError : Error {
  using Error::Error;
};

// Search, rewriting or oracle work exceeded its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

// Focusing hit a case the normalization recursion cannot handle.
struct FocusError : Error {
  using Error::Error;
};

}  // namespace stoup
