#pragma once

#include <stdexcept>
#include <string>

namespace arrchow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ARRCHOW_ERROR(Name)                 \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

ARRCHOW_ERROR(NonPalindromic);
ARRCHOW_ERROR(InvalidParams);
ARRCHOW_ERROR(NotEssential);
ARRCHOW_ERROR(NotComparable);
ARRCHOW_ERROR(NotACover);
ARRCHOW_ERROR(ZeroBlock);
ARRCHOW_ERROR(NonDivisible);
ARRCHOW_ERROR(TooLarge);
ARRCHOW_ERROR(OddSum);
ARRCHOW_ERROR(BaseNotAChamber);
ARRCHOW_ERROR(ParseError);

#undef ARRCHOW_ERROR

}  // namespace arrchow
