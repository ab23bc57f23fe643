#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace monorel {

/// Two operands live in Euclidean spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its stated domain (e.g. a maximality-gated
/// operation on a non-maximal relation).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A monotonicity precondition failed.  Carries a witness graph vector
/// (x, x*) with <x, x*> < 0.
class NonMonotoneError : public PreconditionError {
 public:
  NonMonotoneError(const std::string& what, Eigen::VectorXd witness)
      : PreconditionError(what), witness_(std::move(witness)) {}

  /// Stacked (x, x*) pair in the doubled space with negative coupling.
  const Eigen::VectorXd& witness() const { return witness_; }

 private:
  Eigen::VectorXd witness_;
};

/// A MintyForm violating the 1-Lipschitz bound was passed to from_minty.
class InvalidMintyForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace monorel
