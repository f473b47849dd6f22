#pragma once

#include <stdexcept>
#include <string>

namespace opuc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OPUC_DEFINE_ERROR(Name)              \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

OPUC_DEFINE_ERROR(ParseError);
OPUC_DEFINE_ERROR(NotDivisible);
OPUC_DEFINE_ERROR(ZeroArgument);
OPUC_DEFINE_ERROR(ParamOutOfRange);
OPUC_DEFINE_ERROR(BadSupport);
OPUC_DEFINE_ERROR(BadVerblunsky);
OPUC_DEFINE_ERROR(ConvergenceFailure);
OPUC_DEFINE_ERROR(Degenerate);
OPUC_DEFINE_ERROR(InconsistentSystem);
OPUC_DEFINE_ERROR(QuadratureUnconverged);
OPUC_DEFINE_ERROR(NonPositive);
OPUC_DEFINE_ERROR(SingularDelta);

#undef OPUC_DEFINE_ERROR

}  // namespace opuc
