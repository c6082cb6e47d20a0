#pragma once

#include <stdexcept>
#include <string>

namespace henkato {

// Bad or unrealizable input data. The CLI reports these with exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A state that contradicts an invariant the math guarantees for well-formed
// inputs. The CLI reports these with exit code 1.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Normal form whose shape rules out any monic centered composition.
class NotHenonNormalForm : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Normal form with Henon-compatible shape whose coefficients cannot be peeled
// back to a map (or fail the final forward check).
class InconsistentNormalForm : public InternalError {
public:
  InconsistentNormalForm(const std::string& what, long stage)
      : InternalError("inconsistent normal form (stage " + std::to_string(stage) + "): " + what),
        stage_(stage) {}

  long stage() const { return stage_; }

private:
  long stage_;
};

// Surjectivity target that would force some Jacobian factor to vanish.
class TargetNotRealizable : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Support whose gcd descent never reaches 1.
class TypeUndefined : public ValidationError {
public:
  using ValidationError::ValidationError;
};

}  // namespace henkato
