#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "apollo/int128.hpp"

namespace apollo {

/// Four ordered signed curvatures. Entry 0 is the distinguished circle when
/// the quadruple is used as an n-quadruple.
struct DescartesQuadruple {
  std::array<i128, 4> c{};

  DescartesQuadruple() = default;
  DescartesQuadruple(i128 a, i128 b, i128 cc, i128 d) : c{a, b, cc, d} {}

  i128& operator[](std::size_t i) { return c[i]; }
  const i128& operator[](std::size_t i) const { return c[i]; }

  i128 min() const;
  i128 max() const;

  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;
};

std::ostream& operator<<(std::ostream& os, const DescartesQuadruple& q);
std::string to_string(const DescartesQuadruple& q);

/// Permutation of the four positions: result[i] = q[perm[i]] (0-based).
using Permutation = std::array<std::uint8_t, 4>;
inline constexpr Permutation kIdentityPermutation{0, 1, 2, 3};

/// Transposition of two 1-based positions, e.g. transposition(2, 3) = P_(23).
Permutation transposition(int i, int j);

/// An element P_sigma * S_{l0} * S_{l1} * ... * S_{lk} of the full Apollonian
/// group, written as a matrix product. Letters are 1-based move indices. Acting
/// on a column quadruple, the rightmost letter is applied first and the
/// permutation last.
struct ApWord {
  std::vector<std::uint8_t> letters;
  Permutation perm = kIdentityPermutation;

  ApWord() = default;
  ApWord(std::initializer_list<std::uint8_t> l) : letters(l) {}
  explicit ApWord(std::vector<std::uint8_t> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty() && perm == kIdentityPermutation; }
  /// No two consecutive letters are equal.
  bool is_reduced() const;

  friend bool operator==(const ApWord&, const ApWord&) = default;
};

/// "S4S1" style rendering; empty word renders as "Id".
std::string to_string(const ApWord& w);

/// (a+b+c+d)^2 == 2(a^2+b^2+c^2+d^2), evaluated exactly.
bool is_descartes(const DescartesQuadruple& q);

/// gcd of the four entries equals 1.
bool is_primitive(const DescartesQuadruple& q);

/// S_i for 1-based i: entry i becomes 2*(sum of the others) - entry i.
DescartesQuadruple apply_move(const DescartesQuadruple& q, int i);

DescartesQuadruple apply_permutation(const DescartesQuadruple& q, const Permutation& p);

DescartesQuadruple apply_word(const DescartesQuadruple& q, const ApWord& w);

/// 4x4 integer matrices acting on column quadruples.
using Mat4 = std::array<std::array<i128, 4>, 4>;

Mat4 identity4();
Mat4 multiply(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Mat4 move_matrix(int i);
Mat4 permutation_matrix(const Permutation& p);
Mat4 word_matrix(const ApWord& w);

/// The quadratic form Q_D preserved by every element of the Apollonian group.
Mat4 descartes_form();

}  // namespace apollo
