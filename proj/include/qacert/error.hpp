#pragma once

#include <stdexcept>
#include <string>

namespace qacert {

/// Malformed input: bad file contents, bad flags, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its mathematical domain
/// (division by zero, modulus mismatch, infinite homology, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A consistency check inside a computation failed. `anchor` names the
/// fact being checked so a drifting result is easy to localize.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(std::string anchor, const std::string& detail)
      : std::runtime_error(anchor + ": " + detail), anchor_(std::move(anchor)) {}

  const std::string& anchor() const { return anchor_; }

 private:
  std::string anchor_;
};

}  // namespace qacert
