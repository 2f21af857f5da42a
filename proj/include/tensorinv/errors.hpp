#pragma once

#include <stdexcept>

namespace tensorinv {

// Two algebra elements over distinct groups were combined.
struct GroupMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An element is not constant on some Robinson-Schensted fiber (not in the
// span of the z_t), or a product left the dihedral Q-basis span.  The message
// names a witness.
struct NotInSpanError : std::domain_error {
  using std::domain_error::domain_error;
};

// A custom module input produced a non-integer or negative multiplicity.
struct NonIntegerMultiplicityError : std::domain_error {
  using std::domain_error::domain_error;
};

// The floating-point dihedral oracle failed its integrality gate.
struct RoundingGapError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace tensorinv
