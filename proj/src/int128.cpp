#include "apollo/int128.hpp"

#include <algorithm>

namespace apollo {

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int bit_length(i128 a) {
  u128 v = a < 0 ? u128(0) - u128(a) : u128(a);
  int bits = 0;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? u128(0) - u128(v) : u128(v);
  std::string out;
  while (u != 0) {
    out.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

i128 parse_i128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    v = checked_add(checked_mul(v, 10), s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace apollo
