#pragma once

#include <compare>
#include <string>

#include "apollo/int128.hpp"

namespace apollo {

/// Exact rational over 128-bit integers, always in lowest terms with a
/// positive denominator. Arithmetic throws OverflowError rather than wrap.
class Rational {
 public:
  Rational() = default;
  Rational(i128 n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(i128 n, i128 d);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator-() const { return Rational(checked_sub(0, num_), den_, Normalized{}); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  i128 floor() const { return floor_div(num_, den_); }
  double to_double() const { return double(num_) / double(den_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  struct Normalized {};
  Rational(i128 n, i128 d, Normalized) : num_(n), den_(d) {}

  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace apollo
