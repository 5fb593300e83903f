#pragma once

#include <stdexcept>
#include <string>

namespace qvl {

/// Bad input: malformed diagrams, unknown knots, out-of-range arguments.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric procedure could not certify its result (precision exhausted,
/// ramification hit, ill-conditioned fit). The CLI maps these to exit code 1.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedDiagram : public InputError {
 public:
  using InputError::InputError;
};

class CrossingBudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class PrecisionExhausted : public NumericError {
 public:
  using NumericError::NumericError;
};

class RamificationError : public NumericError {
 public:
  explicit RamificationError(const std::string& what, double at_fraction = -1.0)
      : NumericError(what), at_fraction_(at_fraction) {}
  /// Position along the straight path (0 = start, 1 = end) where it was detected.
  double at_fraction() const { return at_fraction_; }

 private:
  double at_fraction_;
};

class IllConditioned : public NumericError {
 public:
  IllConditioned(const std::string& what, double condition)
      : NumericError(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

}  // namespace qvl
