#pragma once

#include <stdexcept>

namespace dioph {

// Coefficient vector with fewer than two entries.
struct too_short : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coefficient vector whose entries do not generate Z as an ideal.
struct not_unimodular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exact linear solve produced a fractional entry where the caller's
// contract promised an integral one.
struct non_integral_solution : std::domain_error {
  using std::domain_error::domain_error;
};

// Generators claimed to lie inside a module do not.
struct containment_violation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured candidate budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically guaranteed invariant failed to hold; indicates a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dioph
