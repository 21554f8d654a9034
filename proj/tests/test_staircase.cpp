#include "doctest.h"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "apollo/staircase.hpp"

using namespace apollo;

namespace {

DepthCircle circle(CoefficientQuadruple c) { return DepthCircle{c, {}, 0}; }

// Word grammar of the stairs, used as an oracle: W_k alternates S1 and S4
// ending in S1, and the remaining full stairs are W' W_k with k >= 2 and W'
// ending in S3.
StairKind grammar_kind(const DepthCircle& c) {
  if (c.word.letters.empty()) {
    if (c.row == 2) return StairKind::Bottom;
    return StairKind::NullMeasure;
  }
  const auto& l = c.word.letters;
  std::size_t k = 0;
  while (k < l.size()) {
    const std::uint8_t expect = (k % 2 == 0) ? 1 : 4;
    if (l[l.size() - 1 - k] != expect) break;
    ++k;
  }
  if (k == l.size()) {
    if (k == 1) return StairKind::Sixth;
    return StairKind::Half;
  }
  if (k >= 2 && l[l.size() - 1 - k] == 3) return StairKind::Full;
  return StairKind::NullMeasure;
}

}  // namespace

TEST_CASE("initial configuration") {
  const auto circles = depth_circles_by_length(0);
  REQUIRE(circles.size() == 4);
  CHECK(circles[0].coeffs.w == 0);
  CHECK(circles[0].coeffs.t == -1);
  CHECK(circles[1].coeffs == CoefficientQuadruple{1, 1, 0, 0});
  CHECK(circles[2].center_x() == Rational(0));
  CHECK(circles[2].center_y() == Rational(1, 2));
  CHECK(circles[2].radius() == Rational(1, 2));
  CHECK(circles[3].center_x() == Rational(-1));
  CHECK(circles[3].center_y() == Rational(1, 2));
  CHECK(circles[3].radius() == Rational(1, 2));
}

TEST_CASE("depth-one circles") {
  const auto circles = depth_circles_by_length(1);
  REQUIRE(circles.size() == 8);
  const DepthCircle& s1 = circles[4];
  CHECK(s1.word == ApWord{1});
  CHECK(s1.coeffs == CoefficientQuadruple{7, 4, -2, 4});
  CHECK(s1.center_x() == Rational(-1, 2));
  CHECK(s1.center_y() == Rational(7, 8));
  CHECK(s1.radius() == Rational(1, 8));
  const DepthCircle& s2 = circles[5];
  CHECK(s2.coeffs == CoefficientQuadruple{1, 1, -2, 4});
  CHECK(s2.center_x() == Rational(-1, 2));
  CHECK(s2.center_y() == Rational(1, 8));
  CHECK(s2.radius() == Rational(1, 8));
}

TEST_CASE("strip BFS rows are valid and unique") {
  const auto circles = strip_circle_bfs(200, 2);
  std::map<CoefficientQuadruple, int> seen;
  for (const auto& c : circles) {
    CHECK(c.coeffs.norm() == 1);
    CHECK(c.coeffs.w <= 200);
    CHECK(++seen[c.coeffs] == 1);
    if (c.coeffs.w > 0) {
      CHECK(coefficient_quadruple(c.word, c.row) == c.coeffs);
    }
  }
  CHECK(strip_circle_bfs(200, 1).size() == circles.size());
}

TEST_CASE("strip BFS is complete against word enumeration") {
  // Every circle reachable by words of length <= 8 with w <= 20 inside the
  // period window shows up in the BFS.
  std::map<CoefficientQuadruple, int> bfs;
  for (const auto& c : strip_circle_bfs(20)) bfs[c.coeffs] = 1;
  for (const auto& c : depth_circles_by_length(8)) {
    if (c.coeffs.w == 0 || c.coeffs.w > 20) continue;
    const Rational x = c.center_x();
    if (x < Rational(-1) || x > Rational(0)) continue;
    CAPTURE(c.label());
    CHECK(bfs.count(c.coeffs) == 1);
  }
}

TEST_CASE("depth circle interiors are disjoint") {
  const auto circles = strip_circle_bfs(64);
  std::vector<const DepthCircle*> disks;
  for (const auto& c : circles)
    if (c.coeffs.w > 0) disks.push_back(&c);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Rational xi = disks[i]->center_x(), yi = disks[i]->center_y(), ri = disks[i]->radius();
    CHECK(yi - ri >= Rational(0));
    CHECK(yi + ri <= Rational(1));
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Rational dx = xi - disks[j]->center_x(), dy = yi - disks[j]->center_y();
      const Rational rs = ri + disks[j]->radius();
      if (!(dx * dx + dy * dy >= rs * rs)) {
        FAIL_CHECK("overlap: " << disks[i]->label() << " " << disks[j]->label());
      }
    }
  }
}

TEST_CASE("classify_stair examples") {
  CHECK(classify_stair(circle({1, 1, 0, 0})) == StairKind::Bottom);
  CHECK(classify_stair(circle({-1, 0, 0, 0})) == StairKind::NullMeasure);
  CHECK(classify_stair(circle({7, 4, -2, 4})) == StairKind::Sixth);
  CHECK(classify_stair(circle({17, 9, -3, 9})) == StairKind::Half);
  CHECK(classify_stair(circle({1, 1, -2, 4})) == StairKind::NullMeasure);
}

TEST_CASE("geometric classification agrees with the word grammar") {
  for (const auto& c : depth_circles_by_length(6)) {
    CAPTURE(c.label());
    CAPTURE(c.row);
    // Only the circle born at the leading letter is the depth circle of W.
    if (!c.word.letters.empty() && c.row != c.word.letters.front()) continue;
    CHECK(classify_stair(c) == grammar_kind(c));
  }
}

TEST_CASE("null-measure circles miss the fundamental domain") {
  for (const auto& c : strip_circle_bfs(300)) {
    if (classify_stair(c) != StairKind::NullMeasure) continue;
    CAPTURE(c.label());
    CHECK(misses_fundamental_domain(c));
  }
}

TEST_CASE("first six stairs") {
  const StaircaseModel m = build_staircase(50);
  const auto& s = m.stairs();
  REQUIRE(s.size() == 6);
  const int ts[] = {1, 7, 17, 31, 49, 49};
  const double widths[] = {1, 0.0717967697, 0.0294372515, 0.0161332303, 0.0102051443, 0.0102051443};
  const double heights[] = {0.9549296586, 0.2886751346, 0.3535533906, 0.1936491673, 0.2449489743, 0.1224744871};
  const char* labels[] = {"Id2", "S1", "S4S1", "S1S4S1", "S3S4S1", "S4S1S4S1"};
  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(s[i].t == ts[i]);
    CHECK(std::abs(s[i].width - widths[i]) < 5e-11);
    CHECK(std::abs(s[i].height() - heights[i]) < 5e-11);
    CHECK(s[i].label() == labels[i]);
    CHECK(s[i].multiplicity == 1);
  }
  std::ostringstream os;
  write_stair_table_csv(os, m);
  CHECK(os.str().rfind("word,t,width,height,d_W\nId2,1,1.0000000000,0.9549296586,0.9549296586\n", 0) == 0);
}

TEST_CASE("staircase mass") {
  CHECK(build_staircase(1).stairs().size() == 1);
  CHECK(std::abs(build_staircase(1).mass() - 3 / std::numbers::pi) < 1e-12);
  double prev = 0;
  for (std::int64_t t : {1, 7, 17, 50, 100, 200, 400}) {
    const StaircaseModel m = build_staircase(t);
    CHECK(m.mass() >= prev);
    CHECK(m.mass() <= 1 + 1e-9);
    prev = m.mass();
  }
  CHECK(build_staircase(100).mass() >= 0.99);
  double partial = 0;
  for (const auto& st : build_staircase(50).stairs()) partial += st.probability;
  const double widths[] = {1, 0.0717967697, 0.0294372515, 0.0161332303, 0.0102051443, 0.0102051443};
  const double heights[] = {0.9549296586, 0.2886751346, 0.3535533906, 0.1936491673, 0.2449489743, 0.1224744871};
  double table = 0;
  for (int i = 0; i < 6; ++i) table += widths[i] * heights[i];
  CHECK(std::abs(partial - table) < 1e-9);
}

TEST_CASE("stair height times width is its probability") {
  for (const auto& st : build_staircase(1000).stairs()) {
    CHECK(std::abs(st.height() * st.width - st.probability) < 1e-9);
    if (st.kind != StairKind::Bottom) {
      const double t = double(st.t);
      CHECK(std::abs(st.probability - st.multiplicity * st.weight * (t / std::sqrt(t * t - 1) - 1)) < 1e-12);
    }
  }
}

TEST_CASE("density and cdf") {
  const StaircaseModel m = build_staircase(50);
  CHECK(std::abs(m.density(0.5) - 0.9549296586) < 1e-9);
  CHECK(std::abs(m.density(0.05) - 1.2436047932) < 1e-9);
  CHECK(m.density(1.5) == 0);
  CHECK(std::abs(m.cdf(1) - m.mass()) < 1e-12);
  CHECK(m.cdf(0) == 0);
  // The cdf integrates the density.
  const int steps = 200000;
  double acc = 0;
  for (int i = 0; i < steps; ++i) acc += m.density((i + 0.5) / steps) / steps;
  CHECK(std::abs(acc - m.cdf(1)) < 1e-4);
}

TEST_CASE("W_k data") {
  CHECK(wk_data(1).coeffs == CoefficientQuadruple{7, 4, -2, 4});
  CHECK(wk_data(1).word == ApWord{1});
  CHECK(wk_data(2).word == ApWord{4, 1});
  CHECK(wk_data(3).word == ApWord{1, 4, 1});
  CHECK(wk_data(1).tangency_x == Rational(-5, 13));
  CHECK(wk_data(1).tangency_y == Rational(12, 13));

  const DepthCircle w2 = circle(wk_data(2).coeffs);
  CHECK(w2.center_x() == Rational(-1, 3));
  CHECK(w2.center_y() == Rational(17, 18));
  CHECK(w2.radius() == Rational(1, 18));

  for (int k = 1; k <= 1000; ++k) {
    const WkData d = wk_data(k);
    const i128 m = k + 1;
    CHECK(d.coeffs == CoefficientQuadruple{2 * m * m - 1, m * m, -m, m * m});
    if (k <= 40) CHECK(coefficient_quadruple(d.word, d.word.letters.front()) == d.coeffs);
    CHECK(d.tangency_x * d.tangency_x + d.tangency_y * d.tangency_y == Rational(1));
    // The point lies on both boundary circles.
    const DepthCircle a = circle(d.coeffs), b = circle(wk_data(k + 1).coeffs);
    for (const DepthCircle* c : {&a, &b}) {
      const Rational dx = d.tangency_x - c->center_x(), dy = d.tangency_y - c->center_y();
      CHECK(dx * dx + dy * dy == c->radius() * c->radius());
    }
  }
  CHECK_THROWS_AS(wk_data(0), std::invalid_argument);
}

TEST_CASE("epsilon circles") {
  FloatCircle c = epsilon_circle({7, 4, -2, 4}, 0);
  CHECK(c.x == doctest::Approx(-0.5));
  CHECK(c.y == doctest::Approx(std::sqrt(48.0) / 8));
  CHECK(c.r == 0);

  c = epsilon_circle({7, 4, -2, 4}, 7 - std::sqrt(48.0));
  CHECK(c.x == doctest::Approx(-0.5));
  CHECK(c.y == doctest::Approx(7.0 / 8).epsilon(1e-12));
  CHECK(c.r == doctest::Approx(1.0 / 8).epsilon(1e-12));

  c = epsilon_circle({17, 9, -3, 9}, 0.01);
  CHECK(c.r * c.r == doctest::Approx((0.0001 + 0.02 * std::sqrt(288.0)) / 324).epsilon(1e-12));

  CHECK_THROWS_AS(epsilon_circle({7, 4, -2, 4}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_circle({7, 4, -2, 4}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_circle({1, 1, 0, 0}, 0), std::invalid_argument);

  // Nested and contained in the depth circle.
  const double top = 7 - std::sqrt(48.0);
  FloatCircle prev = epsilon_circle({7, 4, -2, 4}, 0);
  for (int i = 1; i <= 20; ++i) {
    const FloatCircle cur = epsilon_circle({7, 4, -2, 4}, top * i / 20);
    const double d = std::hypot(cur.x - prev.x, cur.y - prev.y);
    CHECK(d + prev.r <= cur.r + 1e-12);
    CHECK(std::hypot(cur.x + 0.5, cur.y - 0.875) + cur.r <= 0.125 + 1e-12);
    prev = cur;
  }
}
