#pragma once

#include <stdexcept>
#include <string>

namespace kgg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KGG_DEFINE_ERROR(Name)        \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

KGG_DEFINE_ERROR(DegenerateDiameter);
KGG_DEFINE_ERROR(DuplicatePoints);
KGG_DEFINE_ERROR(InvalidArgument);
KGG_DEFINE_ERROR(TooLarge);
KGG_DEFINE_ERROR(OddCardinality);
KGG_DEFINE_ERROR(NoPerfectMatching);
KGG_DEFINE_ERROR(EmptyClass);
KGG_DEFINE_ERROR(ConstraintViolated);
KGG_DEFINE_ERROR(SelfCheckFailed);
KGG_DEFINE_ERROR(ParseError);

#undef KGG_DEFINE_ERROR

}  // namespace kgg
