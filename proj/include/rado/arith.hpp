#pragma once

#include <cstdint>
#include <string>

#include "rado/errors.hpp"

namespace rado {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in addition");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in multiplication");
  return out;
}

// ceil(a / b) for b > 0, exact over the integers.
inline Int ceil_div(Int a, Int b) {
  return a / b + (a % b != 0 && (a > 0) == (b > 0) ? 1 : 0);
}

// The nested ceiling expression ceil(a/b * ceil(a/b)), evaluated inner-first
// on exact integers (a/b is a rational, never rounded before its ceiling).
inline Int nested_ceil(Int a, Int b) {
  if (b <= 0) fail(errc::domain_error, "nested_ceil: nonpositive denominator");
  Int inner = ceil_div(a, b);
  return ceil_div(checked_mul(a, inner), b);
}

// n^e with overflow detection; e >= 0.
inline Int checked_pow(Int n, Int e) {
  Int out = 1;
  for (Int i = 0; i < e; ++i) out = checked_mul(out, n);
  return out;
}

} // namespace rado
