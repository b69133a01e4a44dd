#pragma once

#include <stdexcept>
#include <string>

namespace aspectral {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ASPECTRAL_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

ASPECTRAL_DEFINE_ERROR(NotHermitian);
ASPECTRAL_DEFINE_ERROR(NotPSD);
ASPECTRAL_DEFINE_ERROR(ConvergenceFailure);
ASPECTRAL_DEFINE_ERROR(DimensionMismatch);
ASPECTRAL_DEFINE_ERROR(InvalidArgument);
ASPECTRAL_DEFINE_ERROR(ZeroWeight);
ASPECTRAL_DEFINE_ERROR(NotInMA);
ASPECTRAL_DEFINE_ERROR(NotAInvertible);
ASPECTRAL_DEFINE_ERROR(UnknownLaw);
ASPECTRAL_DEFINE_ERROR(TruncationTooSmall);
ASPECTRAL_DEFINE_ERROR(UnderflowRisk);
ASPECTRAL_DEFINE_ERROR(IndexOutOfTruncation);
ASPECTRAL_DEFINE_ERROR(ParseError);

#undef ASPECTRAL_DEFINE_ERROR

}  // namespace aspectral
