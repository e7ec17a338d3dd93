#pragma once

#include <stdexcept>
#include <string>

namespace sun {

/// Invalid parameters: out-of-range indices, malformed labels, rep mismatches.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested representation exceeds the configured dimension cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A numerical routine failed to converge or produced non-finite output.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters fall in a regime the evaluator refuses to handle
/// (e.g. a hypergeometric series that does not terminate).
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sun
