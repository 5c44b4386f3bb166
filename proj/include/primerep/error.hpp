#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primerep {

// Root of every error thrown by the workbench. Each subclass corresponds to
// one failure mode a caller may want to distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

#define PRIMEREP_DEFINE_ERROR(Name)   \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

PRIMEREP_DEFINE_ERROR(ArityError);
PRIMEREP_DEFINE_ERROR(DomainError);
PRIMEREP_DEFINE_ERROR(EvaluationBudgetExceeded);
PRIMEREP_DEFINE_ERROR(NotPolynomial);
PRIMEREP_DEFINE_ERROR(NotUnivariatePolynomial);
PRIMEREP_DEFINE_ERROR(ModuliNotCoprime);
PRIMEREP_DEFINE_ERROR(NotCoprime);
PRIMEREP_DEFINE_ERROR(FactoringBudgetExceeded);
PRIMEREP_DEFINE_ERROR(MemoryBudgetExceeded);
PRIMEREP_DEFINE_ERROR(GRequiresPrime);
PRIMEREP_DEFINE_ERROR(BoundFunctionMismatch);
PRIMEREP_DEFINE_ERROR(CapExceeded);
PRIMEREP_DEFINE_ERROR(DivisibilityObstruction);
PRIMEREP_DEFINE_ERROR(UsageError);

#undef PRIMEREP_DEFINE_ERROR

}  // namespace primerep
