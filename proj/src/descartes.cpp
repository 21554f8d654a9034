#include "apollo/descartes.hpp"

#include <algorithm>
#include <sstream>

namespace apollo {

i128 DescartesQuadruple::min() const { return *std::min_element(c.begin(), c.end()); }
i128 DescartesQuadruple::max() const { return *std::max_element(c.begin(), c.end()); }

std::ostream& operator<<(std::ostream& os, const DescartesQuadruple& q) {
  return os << to_string(q);
}

std::string to_string(const DescartesQuadruple& q) {
  return "(" + to_string(q[0]) + "," + to_string(q[1]) + "," + to_string(q[2]) + "," +
         to_string(q[3]) + ")";
}

Permutation transposition(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::invalid_argument("transposition index out of range");
  Permutation p = kIdentityPermutation;
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

bool ApWord::is_reduced() const {
  for (std::size_t k = 1; k < letters.size(); ++k) {
    if (letters[k] == letters[k - 1]) return false;
  }
  return true;
}

std::string to_string(const ApWord& w) {
  std::string s;
  if (w.perm != kIdentityPermutation) {
    s += "P(";
    for (auto p : w.perm) s += char('1' + p);
    s += ")";
  }
  for (auto l : w.letters) s += "S" + std::to_string(int(l));
  return s.empty() ? "Id" : s;
}

bool is_descartes(const DescartesQuadruple& q) {
  i128 sum = 0, squares = 0;
  for (i128 v : q.c) {
    sum = checked_add(sum, v);
    squares = checked_add(squares, checked_mul(v, v));
  }
  return checked_mul(sum, sum) == checked_mul(2, squares);
}

bool is_primitive(const DescartesQuadruple& q) {
  i128 g = 0;
  for (i128 v : q.c) g = gcd128(g, v);
  return g == 1;
}

DescartesQuadruple apply_move(const DescartesQuadruple& q, int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("move index must be in 1..4");
  DescartesQuadruple r = q;
  i128 others = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != i - 1) others = checked_add(others, q[k]);
  }
  r[i - 1] = checked_sub(checked_mul(2, others), q[i - 1]);
  return r;
}

DescartesQuadruple apply_permutation(const DescartesQuadruple& q, const Permutation& p) {
  DescartesQuadruple r;
  for (int k = 0; k < 4; ++k) r[k] = q[p[k]];
  return r;
}

DescartesQuadruple apply_word(const DescartesQuadruple& q, const ApWord& w) {
  DescartesQuadruple r = q;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = apply_move(r, *it);
  return apply_permutation(r, w.perm);
}

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      i128 s = 0;
      for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

Mat4 transpose(const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
  return r;
}

Mat4 move_matrix(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("move index must be in 1..4");
  Mat4 m = identity4();
  for (int k = 0; k < 4; ++k) m[i - 1][k] = 2;
  m[i - 1][i - 1] = -1;
  return m;
}

Mat4 permutation_matrix(const Permutation& p) {
  Mat4 m{};
  for (int k = 0; k < 4; ++k) m[k][p[k]] = 1;
  return m;
}

Mat4 word_matrix(const ApWord& w) {
  Mat4 m = permutation_matrix(w.perm);
  for (auto l : w.letters) m = multiply(m, move_matrix(l));
  return m;
}

Mat4 descartes_form() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : -1;
  return m;
}

}  // namespace apollo
