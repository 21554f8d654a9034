#pragma once

#include <optional>
#include <string>

#include "apollo/descartes.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// Ax^2 + Bxy + Cy^2.
struct BinaryQuadraticForm {
  i128 a = 0, b = 0, c = 0;

  i128 discriminant() const { return checked_sub(checked_mul(b, b), checked_mul(checked_mul(4, a), c)); }
  bool is_positive_semidefinite() const { return discriminant() <= 0 && a >= 0 && c >= 0; }
  /// 0 <= B <= A <= C.
  bool is_reduced() const { return 0 <= b && b <= a && a <= c; }

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
  friend auto operator<=>(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

std::string to_string(const BinaryQuadraticForm& f);

/// [n, A, B, C] with [A, B, C] positive semidefinite of discriminant -4n^2.
struct BqfQuadruple {
  i128 n = 0;
  BinaryQuadraticForm form;

  /// A, C >= 0, 4n^2 + B^2 - 4AC = 0, and not all zero.
  bool is_valid() const;
  bool is_primitive() const;

  friend bool operator==(const BqfQuadruple&, const BqfQuadruple&) = default;
};

std::string to_string(const BqfQuadruple& q);

/// Integer 2x2 matrix [[a, b], [c, d]] with determinant +-1.
struct Gl2 {
  i128 a = 1, b = 0, c = 0, d = 1;

  i128 det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
  /// Inverse in PGL(2, Z) (the adjugate; scalars are immaterial).
  Gl2 inverse() const { return {d, -b, -c, a}; }

  static Gl2 identity() { return {}; }
  static Gl2 s() { return {0, 1, -1, 0}; }
  static Gl2 t() { return {1, 1, 0, 1}; }
  static Gl2 u() { return {1, 0, 0, -1}; }

  friend bool operator==(const Gl2&, const Gl2&) = default;
};

Gl2 operator*(const Gl2& x, const Gl2& y);

BqfQuadruple phi(const DescartesQuadruple& q);
DescartesQuadruple theta(const BqfQuadruple& q);

/// gQ(x, y) = Q(ax + by, cx + dy). Throws std::invalid_argument if |det g| != 1.
BqfQuadruple gl2_act(const Gl2& g, const BqfQuadruple& q);

struct Reduction {
  BqfQuadruple form;
  Gl2 transform;  // gl2_act(transform, input) == form
};

/// PGL(2, Z) reduction to the unique representative with 0 <= B <= A <= C.
/// Requires n > 0; semidefinite (n == 0) and invalid inputs are rejected.
Reduction reduce(const BqfQuadruple& q);

/// Point of P^1(C): either infinity or x + iy with exact rational parts.
struct ProjectivePoint {
  bool infinite = false;
  Rational x, y;

  static ProjectivePoint infinity() { return {true, {}, {}}; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

std::string to_string(const ProjectivePoint& p);

/// (-B + 2ni) / (2A), or infinity when A == 0.
ProjectivePoint principal_root(const BqfQuadruple& q);

/// PGL(2, Z) action on P^1(C): Moebius map for det +1, on the conjugate for det -1.
ProjectivePoint act(const Gl2& g, const ProjectivePoint& z);

/// Row data (t, u, v, w) of W * S_theta, where the row reads (-t, u, v, w).
struct CoefficientQuadruple {
  i128 t = 0, u = 0, v = 0, w = 0;

  /// t^2 + 4v^2 - 4uw.
  i128 norm() const;

  friend bool operator==(const CoefficientQuadruple&, const CoefficientQuadruple&) = default;
  friend auto operator<=>(const CoefficientQuadruple&, const CoefficientQuadruple&) = default;
};

std::string to_string(const CoefficientQuadruple& c);

/// S_theta: theta[n, A, B, C] = S_theta * (n, A, B, C)^T.
const Mat4& theta_matrix();
/// Q_theta, with S_theta Q_theta S_theta^T = Q_D.
const Mat4& theta_form();
/// Checks S_theta Q_theta S_theta^T == Q_D; runs once on first use of the constants.
bool theta_constants_consistent();

/// Row j (1-based) of word_matrix(w) * S_theta, with the first entry negated.
/// The empty word with row j gives the coefficient quadruple of Id_j.
CoefficientQuadruple coefficient_quadruple(const ApWord& w, int j);

/// Coefficient quadruple from a 4x4 row, (-t, u, v, w) -> (t, u, v, w).
CoefficientQuadruple coefficient_from_row(const std::array<i128, 4>& row);

}  // namespace apollo
