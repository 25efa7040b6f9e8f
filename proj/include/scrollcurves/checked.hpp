#pragma once

// Exact 64-bit integer arithmetic with overflow detection. Intermediate
// products go through a 128-bit type so that bounded inputs never overflow
// before the final narrowing.

#include <cstdint>
#include <limits>
#include <string>

#include "scrollcurves/errors.hpp"

namespace scrollcurves {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

namespace checked {

inline Int narrow(Wide v, const char* what = "value") {
  if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
      v < static_cast<Wide>(std::numeric_limits<Int>::min())) {
    throw OverflowError(std::string("integer overflow computing ") + what);
  }
  return static_cast<Int>(v);
}

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// Exact quotient; throws ConsistencyError when `den` does not divide `num`.
inline Int exact_div(Wide num, Wide den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw ConsistencyError(std::string("inexact division computing ") + what);
  }
  return narrow(num / den, what);
}

}  // namespace checked
}  // namespace scrollcurves
