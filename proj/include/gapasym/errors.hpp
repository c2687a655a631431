#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapasym {

// Caller supplied an argument outside an operation's contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the range an evaluator has been validated for.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// An algorithm failed to produce a trustworthy number.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loss of positivity or precision in a structured-matrix computation.
// largest_usable_order() is -1 when unknown.
class ConditioningError : public NumericalFailure {
 public:
  explicit ConditioningError(const std::string& what, int largest_usable_order = -1)
      : NumericalFailure(what), largest_usable_order_(largest_usable_order) {}

  int largest_usable_order() const noexcept { return largest_usable_order_; }

 private:
  int largest_usable_order_;
};

class NotPositiveDefinite : public ConditioningError {
 public:
  explicit NotPositiveDefinite(std::size_t pivot)
      : ConditioningError("matrix is not positive definite at pivot " + std::to_string(pivot),
                          static_cast<int>(pivot)),
        pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

}  // namespace gapasym
