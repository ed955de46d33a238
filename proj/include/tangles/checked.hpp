#pragma once

#include <cstdint>
#include <stdexcept>

namespace tangles {

// Exact integer arithmetic for subdiagram counts and coefficients.
// Counts grow combinatorially; wrap-around would silently corrupt an
// invariant value, so any overflow raises instead.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

} // namespace tangles
