#pragma once

#include <stdexcept>
#include <string>

namespace leibal {

// Everything user-facing derives from leibal::error so callers (and the CLI,
// which maps failures to exit status 2) can catch one type.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mixed ambient dimensions / incompatible shapes
struct dim_mismatch : error {
  using error::error;
};

// a subspace was required to contain another and does not
struct containment_error : error {
  using error::error;
};

// an operation required a two-sided ideal and got something else
struct not_an_ideal : error {
  using error::error;
};

// input outside the computable class (e.g. multiplier of a non-nilpotent algebra)
struct unsupported_input : error {
  using error::error;
};

// truncated free-algebra cross-checks disagreed even after level escalation
struct truncation_error : error {
  using error::error;
};

// a map that had to be a homomorphism / surjection is not
struct bad_homomorphism : error {
  using error::error;
};

// catalog parameter outside its admissible set
struct admissibility_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

} // namespace leibal
