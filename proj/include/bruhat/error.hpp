#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

/// A mathematically invalid request: shape mismatch, singular matrix,
/// angle against a zero filtration, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input that does not parse into any valid object.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace bruhat
