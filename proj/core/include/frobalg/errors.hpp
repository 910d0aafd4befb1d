#pragma once

#include <stdexcept>
#include <string>

namespace frobalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FROBALG_DEFINE_ERROR(Name)         \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// exact-linalg
FROBALG_DEFINE_ERROR(FieldMismatch);
FROBALG_DEFINE_ERROR(DivisionByZero);
FROBALG_DEFINE_ERROR(SingularMatrix);
FROBALG_DEFINE_ERROR(ParseError);

// algebra-core
FROBALG_DEFINE_ERROR(DimensionMismatch);
FROBALG_DEFINE_ERROR(InvalidAlgebra);

// structure
FROBALG_DEFINE_ERROR(UnsupportedField);
FROBALG_DEFINE_ERROR(NotSplitUnverified);
FROBALG_DEFINE_ERROR(NotSelfInjectiveLike);
FROBALG_DEFINE_ERROR(WitnessNotFound);
FROBALG_DEFINE_ERROR(BlockMismatch);

// frobenius
FROBALG_DEFINE_ERROR(NotFrobenius);
FROBALG_DEFINE_ERROR(SingularGram);
FROBALG_DEFINE_ERROR(NotInvertible);

// amplify-spread
FROBALG_DEFINE_ERROR(NotBasic);
FROBALG_DEFINE_ERROR(IndexOutOfRange);
FROBALG_DEFINE_ERROR(BadBlockSupport);
FROBALG_DEFINE_ERROR(NotBijection);

// families / cli
FROBALG_DEFINE_ERROR(BadParams);

#undef FROBALG_DEFINE_ERROR

}  // namespace frobalg
