#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "apollo/geometry.hpp"
#include "oracles.hpp"

using namespace apollo;

namespace {

std::multiset<long long> curvatures(const Scene& s) {
  std::multiset<long long> out;
  for (const auto& c : s.circles) out.insert(c.curvature);
  return out;
}

}  // namespace

TEST_CASE("depth circle scene") {
  Scene s = render_depth_circles(0);
  CHECK(s.lines.size() == 2);
  REQUIRE(s.circles.size() == 2);
  CHECK(s.circles[0].x == 0);
  CHECK(s.circles[0].y == 0.5);
  CHECK(s.circles[0].r == 0.5);
  CHECK(s.circles[1].x == -1);
  CHECK(s.circles[1].exact_r == "1/2");

  s = render_depth_circles(1);
  CHECK(s.circles.size() == 6);
  bool s1 = false;
  for (const auto& c : s.circles) s1 |= (c.exact_x == "-1/2" && c.exact_y == "7/8" && c.exact_r == "1/8");
  CHECK(s1);

  CHECK(render_depth_circles(2).circles.size() == 18);
  CHECK_THROWS_AS(render_depth_circles(-1), std::invalid_argument);
}

TEST_CASE("packing scene") {
  // S4 fixes the curvature 7, so the packing holds two mirror-image 7-circles.
  const Scene small = render_packing({-2, 3, 6, 7}, 7);
  CHECK(curvatures(small) == std::multiset<long long>{-2, 3, 6, 7, 7});
  CHECK(curvatures(render_packing({-2, 3, 6, 7}, 6)) == std::multiset<long long>{-2, 3, 6});

  const Scene fig = render_packing({-7, 12, 17, 20}, 100);
  const auto ks = curvatures(fig);
  CHECK(*ks.begin() == -7);
  CHECK(ks.count(-7) == 1);
  const SceneCircle* outer = nullptr;
  for (const auto& c : fig.circles)
    if (c.curvature == -7) outer = &c;
  REQUIRE(outer != nullptr);
  for (const auto& c : fig.circles) {
    if (&c == outer) continue;
    CHECK(std::hypot(c.x - outer->x, c.y - outer->y) + c.r <= outer->r + 1e-9);
    CHECK(c.r == doctest::Approx(1.0 / double(c.curvature)));
  }

  CHECK_THROWS_AS(render_packing({1, 0, 0, 1}, 10), std::invalid_argument);
  CHECK_THROWS_AS(render_packing({0, 0, 1, 1}, 10), std::invalid_argument);
}

TEST_CASE("packing circles do not overlap") {
  for (const DescartesQuadruple& q : {DescartesQuadruple{-7, 12, 17, 20}, DescartesQuadruple{-2, 3, 6, 7},
                                      DescartesQuadruple{-6, 10, 15, 19}}) {
    const Scene s = render_packing(q, 200);
    const auto& c = s.circles;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const double d = std::hypot(c[i].x - c[j].x, c[i].y - c[j].y);
        const double tol = 1e-9 * (1 + c[i].r + c[j].r);
        if (c[i].curvature < 0 || c[j].curvature < 0) {
          CHECK(d + std::min(c[i].r, c[j].r) <= std::max(c[i].r, c[j].r) + tol);
        } else {
          CHECK(d >= c[i].r + c[j].r - tol);
        }
      }
    }
  }
}

TEST_CASE("rendered curvatures do not depend on the seed") {
  std::mt19937_64 rng(4);
  const DescartesQuadruple q{-7, 12, 17, 20};
  const auto base = curvatures(render_packing(q, 300));
  for (int trial = 0; trial < 10; ++trial) {
    const DescartesQuadruple other = apply_word(q, testing::random_reduced_word(rng, 6, true));
    CHECK(curvatures(render_packing(other, 300)) == base);
  }
}

TEST_CASE("epsilon circle scene") {
  const double top = 7 - std::sqrt(48.0);
  Scene s = render_epsilon_circles({7, 4, -2, 4}, {top});
  bool outline = false, eps = false;
  for (const auto& c : s.circles) {
    if (c.kind == "depth") outline = true;
    if (c.kind == "epsilon") {
      eps = true;
      CHECK(c.r == doctest::Approx(0.125));
      CHECK(c.y == doctest::Approx(0.875));
    }
  }
  CHECK(outline);
  CHECK(eps);

  s = render_epsilon_circles({7, 4, -2, 4}, {0});
  const ScenePoint* centre = nullptr;
  for (const auto& p : s.points)
    if (p.kind == "epsilon-center") centre = &p;
  REQUIRE(centre != nullptr);
  CHECK(centre->x == doctest::Approx(-0.5));
  CHECK(centre->y == doctest::Approx(std::sqrt(48.0) / 8));

  CHECK_THROWS_AS(render_epsilon_circles({7, 4, -2, 4}, {1.0}), std::invalid_argument);
}

TEST_CASE("svg and csv output") {
  Scene s = render_depth_circles(2);
  add_fundamental_domain(s);
  std::ostringstream a, b;
  write_svg(a, s);
  write_svg(b, render_depth_circles(2));
  std::ostringstream a2;
  Scene s2 = render_depth_circles(2);
  add_fundamental_domain(s2);
  write_svg(a2, s2);
  CHECK(a.str() == a2.str());
  CHECK(a.str().rfind("<?xml", 0) == 0);
  CHECK(a.str().find("</svg>") != std::string::npos);
  CHECK(a.str() != b.str());

  std::ostringstream csv;
  write_circle_csv(csv, render_depth_circles(0));
  const std::string text = csv.str();
  CHECK(text.rfind("kind,x,y,r,label\n", 0) == 0);
  CHECK(text.find("0,1/2,1/2") != std::string::npos);
  CHECK(text.find("-1,1/2,1/2") != std::string::npos);
}
