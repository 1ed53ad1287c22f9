#pragma once

#include <stdexcept>
#include <string>

namespace hyperlog {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (DivergentArgument, DomainError,
// NotConvergentAt1, BadLowerParameter, ...).
struct domain_error : error {
  using error::error;
};

// A value crosses or straddles a branch cut under the requested policy.
struct branch_cut_error : error {
  using error::error;
};

// An iterative scheme hit its cap without meeting its target.
struct convergence_error : error {
  using error::error;
};

// A structural precondition failed (NotGaussType, modulus mismatch, ...).
struct precondition_error : error {
  using error::error;
};

// A denominator factor vanished where the recurrences need it nonzero.
struct pole_error : error {
  using error::error;
};

// Contiguity machinery: zero prefactor, insufficient truncation order,
// or no operator ordering with all prefactors nonzero.
struct zero_prefactor_error : error {
  using error::error;
};
struct order_error : error {
  using error::error;
};
struct plan_error : error {
  using error::error;
};

// Parse failures for the external string forms.
struct parse_error : error {
  using error::error;
};

// A state the preconditions are supposed to exclude (e.g. a fractional-part
// tie); indicates a bug in the caller's modulus bookkeeping, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hyperlog
