#pragma once

#include <stdexcept>
#include <string>

namespace pin2fill {

// Shape or bookkeeping violation: mismatched spaces, blocks of the wrong
// size, windows that cannot hold the requested data. Indicates a caller bug.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside the documented domain (k < 1, negative Betti numbers,
// out-of-window grading queries).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input does not satisfy a theorem's hypotheses.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grading bookkeeping that cannot be made consistent, e.g. a bar-level map
// whose V-power would have to be fractional.
struct GradingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Even unimodular classification is inapplicable (definite input) or empty
// (signature not divisible by 8).
struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Catalog lookup misses.
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Catalog data that parses as JSON but violates the schema. Messages carry
// entry/field locations (and line:column for raw parse failures).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pin2fill
