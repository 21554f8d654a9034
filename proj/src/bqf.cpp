#include "apollo/bqf.hpp"

#include <stdexcept>

namespace apollo {

std::string to_string(const BinaryQuadraticForm& f) {
  return "[" + to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c) + "]";
}

bool BqfQuadruple::is_valid() const {
  if (n == 0 && form.a == 0 && form.b == 0 && form.c == 0) return false;
  if (form.a < 0 || form.c < 0) return false;
  return checked_add(checked_mul(checked_mul(4, n), n), form.discriminant()) == 0;
}

bool BqfQuadruple::is_primitive() const {
  return gcd128(gcd128(n, form.a), gcd128(form.b, form.c)) == 1;
}

std::string to_string(const BqfQuadruple& q) {
  return "[" + to_string(q.n) + "," + to_string(q.form.a) + "," + to_string(q.form.b) + "," +
         to_string(q.form.c) + "]";
}

Gl2 operator*(const Gl2& x, const Gl2& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

BqfQuadruple phi(const DescartesQuadruple& q) {
  const i128 n = q[0], a = q[1], b = q[2], c = q[3];
  return {n,
          {checked_add(n, a), checked_sub(checked_add(checked_add(n, a), b), c), checked_add(n, b)}};
}

DescartesQuadruple theta(const BqfQuadruple& q) {
  const i128 n = q.n, a = q.form.a, b = q.form.b, c = q.form.c;
  return {n, checked_sub(a, n), checked_sub(c, n),
          checked_sub(checked_sub(checked_add(a, c), b), n)};
}

BqfQuadruple gl2_act(const Gl2& g, const BqfQuadruple& q) {
  i128 det = g.det();
  if (det != 1 && det != -1) throw std::invalid_argument("gl2_act: |det| must be 1");
  const i128 A = q.form.a, B = q.form.b, C = q.form.c;
  // Q(ax + by, cx + dy)
  auto eval = [&](i128 x, i128 y) {
    return checked_add(checked_add(checked_mul(checked_mul(A, x), x), checked_mul(checked_mul(B, x), y)),
                       checked_mul(checked_mul(C, y), y));
  };
  i128 na = eval(g.a, g.c);
  i128 nc = eval(g.b, g.d);
  i128 nb = checked_add(checked_add(checked_mul(checked_mul(2, A), checked_mul(g.a, g.b)),
                                    checked_mul(B, checked_add(checked_mul(g.a, g.d), checked_mul(g.b, g.c)))),
                        checked_mul(checked_mul(2, C), checked_mul(g.c, g.d)));
  return {q.n, {na, nb, nc}};
}

Reduction reduce(const BqfQuadruple& q) {
  if (q.n <= 0) throw std::invalid_argument("reduce: requires n > 0");
  if (!q.is_valid()) throw std::invalid_argument("reduce: not a BQF quadruple " + to_string(q));
  BqfQuadruple cur = q;
  Gl2 g = Gl2::identity();
  auto step = [&](const Gl2& m) {
    cur = gl2_act(m, cur);
    g = g * m;
  };
  for (;;) {
    const i128 A = cur.form.a;
    // Translate B into (-A, A].
    i128 k = floor_div(checked_sub(A, cur.form.b), checked_mul(2, A));
    if (k != 0) step(Gl2{1, k, 0, 1});
    if (cur.form.b < 0) step(Gl2::u());
    if (cur.form.a > cur.form.c) {
      step(Gl2::s());
      continue;
    }
    break;
  }
  return {cur, g};
}

std::string to_string(const ProjectivePoint& p) {
  if (p.infinite) return "inf";
  return "(" + p.x.str() + "," + p.y.str() + ")";
}

ProjectivePoint principal_root(const BqfQuadruple& q) {
  if (q.form.a == 0) return ProjectivePoint::infinity();
  return {false, Rational(-q.form.b, checked_mul(2, q.form.a)), Rational(q.n, q.form.a)};
}

ProjectivePoint act(const Gl2& g, const ProjectivePoint& z) {
  i128 det = g.det();
  if (det != 1 && det != -1) throw std::invalid_argument("act: |det| must be 1");
  if (z.infinite) {
    if (g.c == 0) return ProjectivePoint::infinity();
    return {false, Rational(g.a, g.c), Rational(0)};
  }
  Rational x = z.x;
  Rational y = det == 1 ? z.y : -z.y;
  // (a z + b) / (c z + d) with z = x + iy.
  Rational nr = Rational(g.a) * x + Rational(g.b), ni = Rational(g.a) * y;
  Rational dr = Rational(g.c) * x + Rational(g.d), di = Rational(g.c) * y;
  Rational norm = dr * dr + di * di;
  if (norm.sign() == 0) return ProjectivePoint::infinity();
  return {false, (nr * dr + ni * di) / norm, (ni * dr - nr * di) / norm};
}

i128 CoefficientQuadruple::norm() const {
  return checked_sub(checked_add(checked_mul(t, t), checked_mul(4, checked_mul(v, v))),
                     checked_mul(4, checked_mul(u, w)));
}

std::string to_string(const CoefficientQuadruple& c) {
  return "(" + to_string(c.t) + "," + to_string(c.u) + "," + to_string(c.v) + "," + to_string(c.w) + ")";
}

namespace {

Mat4 make_theta_matrix() {
  return Mat4{{{1, 0, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 0, 1}, {-1, 1, -1, 1}}};
}

Mat4 make_theta_form() {
  return Mat4{{{1, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 4, 0}, {0, -2, 0, 0}}};
}

bool check_theta_constants() {
  const Mat4 s = make_theta_matrix();
  return multiply(multiply(s, make_theta_form()), transpose(s)) == descartes_form();
}

const bool kThetaOk = [] {
  if (!check_theta_constants()) throw std::logic_error("S_theta/Q_theta constants are inconsistent");
  return true;
}();

}  // namespace

const Mat4& theta_matrix() {
  static const Mat4 m = make_theta_matrix();
  return m;
}

const Mat4& theta_form() {
  static const Mat4 m = make_theta_form();
  return m;
}

bool theta_constants_consistent() { return kThetaOk && check_theta_constants(); }

CoefficientQuadruple coefficient_from_row(const std::array<i128, 4>& row) {
  return {checked_sub(0, row[0]), row[1], row[2], row[3]};
}

CoefficientQuadruple coefficient_quadruple(const ApWord& w, int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("row index must be in 1..4");
  Mat4 m = multiply(word_matrix(w), theta_matrix());
  return coefficient_from_row(m[j - 1]);
}

}  // namespace apollo
