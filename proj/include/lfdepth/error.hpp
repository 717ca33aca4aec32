#pragma once

#include <stdexcept>
#include <string>

namespace lfdepth {

// Base class for all recoverable pipeline errors. The CLI maps these to
// exit code 2; anything else is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LFDEPTH_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

LFDEPTH_DEFINE_ERROR(DimensionMismatch);
LFDEPTH_DEFINE_ERROR(IndexOutOfRange);
LFDEPTH_DEFINE_ERROR(IoError);
LFDEPTH_DEFINE_ERROR(MissingView);
LFDEPTH_DEFINE_ERROR(CorruptImage);
LFDEPTH_DEFINE_ERROR(MalformedManifest);
LFDEPTH_DEFINE_ERROR(MalformedPfm);
LFDEPTH_DEFINE_ERROR(DegenerateEpi);
LFDEPTH_DEFINE_ERROR(DegenerateGrid);
LFDEPTH_DEFINE_ERROR(ImageTooSmall);
LFDEPTH_DEFINE_ERROR(NoCoherentPixels);
LFDEPTH_DEFINE_ERROR(NonFiniteLoss);
LFDEPTH_DEFINE_ERROR(InvalidSpec);
LFDEPTH_DEFINE_ERROR(EmptyMask);

#undef LFDEPTH_DEFINE_ERROR

}  // namespace lfdepth
