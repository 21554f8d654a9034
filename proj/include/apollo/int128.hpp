#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apollo {

using i128 = __int128;
using u128 = unsigned __int128;

/// Thrown when an exact integer computation leaves the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("i128 addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("i128 subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("i128 multiplication overflow");
  return r;
}

inline i128 abs128(i128 a) { return a < 0 ? checked_sub(0, a) : a; }

i128 gcd128(i128 a, i128 b);

/// Floor division; `b` must be nonzero.
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Number of bits needed for |a|.
int bit_length(i128 a);

std::string to_string(i128 v);
i128 parse_i128(std::string_view s);

}  // namespace apollo
