#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyopt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "ParseError"; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define POLYOPT_DECLARE_ERROR(Name)                                  \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  };

// The localized solution set has positive dimension.
POLYOPT_DECLARE_ERROR(NotZeroDimensional)
// Random choices kept failing certification after the retry budget.
POLYOPT_DECLARE_ERROR(GenericityFailure)
// A returned point has a rank-deficient Jacobian.
POLYOPT_DECLARE_ERROR(RegularityViolation)
// det of the reduced Hessian vanishes at a critical point.
POLYOPT_DECLARE_ERROR(SingularHessian)
// No direction with the requested derivative signs was found.
POLYOPT_DECLARE_ERROR(NoDirection)
POLYOPT_DECLARE_ERROR(MixedSignOnComponent)
POLYOPT_DECLARE_ERROR(EmptyFeasibleSet)
POLYOPT_DECLARE_ERROR(InvalidInput)

#undef POLYOPT_DECLARE_ERROR

}  // namespace polyopt
