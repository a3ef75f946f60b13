#pragma once

#include <stdexcept>

namespace lcmq {

/// Arithmetic between elements of Z[√-c] (or Q(√-c)) for different c.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact quotient was requested but the divisor does not divide.
class NotExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bézout cofactors requested for polynomials sharing a factor.
class CommonFactorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The inputs of a conditional check do not satisfy its hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proven identity or inequality failed to hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcmq
