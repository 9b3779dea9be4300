#pragma once

#include <stdexcept>
#include <string>

namespace tagix {

// Malformed input files (ragged MSA rows, bad Newick, truncated bundles).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a precondition (sentinel inside a body,
// missing labels for a label scheme, out-of-range interval).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failures, e.g. an LF cycle that does not cover the text.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tagix
