#pragma once

#include <stdexcept>
#include <string>

namespace hdet {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HDET_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                \
    using Error::Error;                   \
  }

HDET_DEFINE_ERROR(DegenerateJInvariant);
HDET_DEFINE_ERROR(NonUnitaryFactor);
HDET_DEFINE_ERROR(UnknownState);
HDET_DEFINE_ERROR(ArityMismatch);
HDET_DEFINE_ERROR(NotHermitian);
HDET_DEFINE_ERROR(OutOfOrderingRange);
HDET_DEFINE_ERROR(SingularAtZeroField);
HDET_DEFINE_ERROR(InvalidCoupling);
HDET_DEFINE_ERROR(NonOrthonormalBasis);
HDET_DEFINE_ERROR(BadRange);

#undef HDET_DEFINE_ERROR

}  // namespace hdet
