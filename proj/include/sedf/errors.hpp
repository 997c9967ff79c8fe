#pragma once

#include <stdexcept>
#include <string>

namespace sedf {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (Cayley files, group specs, family strings).
struct parse_error : error {
  using error::error;
};

// Structurally invalid data: non-group tables, overlapping blocks, bad labels.
struct validation_error : error {
  using error::error;
};

// Numeric arguments outside an operation's domain (inadmissible parameters,
// wrong residue classes, out-of-range orders).
struct parameter_error : error {
  using error::error;
};

// Mismatched shapes between families/profiles (block counts, block sizes).
struct shape_error : error {
  using error::error;
};

// A construction hypothesis the caller must establish does not hold.
struct precondition_error : error {
  using error::error;
};

} // namespace sedf
