#include "doctest.h"

#include <cmath>
#include <random>

#include "apollo/depth.hpp"
#include "oracles.hpp"

using namespace apollo;

TEST_CASE("reduce_to_root examples") {
  auto r = reduce_to_root({7, -2, 3, 6});
  CHECK(r.depth == 0);
  CHECK(minimal_curvature(r) == 2);
  CHECK(r.root.min() == -2);

  r = reduce_to_root({105, 12, 17, 20});
  CHECK(r.depth == 1);
  CHECK(minimal_curvature(r) == 7);
  CHECK(r.word == ApWord{1});

  r = reduce_to_root({1, 0, 0, 1});
  CHECK(r.depth == 0);
  CHECK(minimal_curvature(r) == 0);

  CHECK_THROWS_AS(reduce_to_root({1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("depth_elements examples") {
  CHECK(depth_elements({7, -2, 3, 6}) == std::vector<DepthElement>{DepthElement::identity(2)});
  CHECK(depth_elements({105, 12, 17, 20}) == std::vector<DepthElement>{DepthElement::from_word(ApWord{1})});
  CHECK(depth_elements({1, 0, 0, 1}) == std::vector<DepthElement>{DepthElement::identity(2), DepthElement::identity(3)});
}

TEST_CASE("rmc examples") {
  auto heights = [](std::int64_t n) { return rmc(n).heights(); };
  std::vector<Rational> seven = heights(7);
  std::sort(seven.begin(), seven.end());
  CHECK(seven == std::vector<Rational>{Rational(2, 7), Rational(5, 7), Rational(6, 7)});
  CHECK(heights(1) == std::vector<Rational>{Rational(0)});
  CHECK(heights(2) == std::vector<Rational>{Rational(1, 2)});

  const RmcResult r7 = rmc(7);
  for (const auto& rec : r7.records) CHECK(rec.depth == 0);
}

TEST_CASE("histogram examples") {
  auto h = histogram({Rational(0), Rational(1, 2)}, 2);
  REQUIRE(h.size() == 2);
  CHECK(h[0].lo == Rational(0));
  CHECK(h[0].hi == Rational(1, 2));
  CHECK(h[0].count == 1);
  CHECK(h[1].count == 1);

  h = histogram({Rational(2, 7), Rational(5, 7), Rational(6, 7)}, 1);
  REQUIRE(h.size() == 1);
  CHECK(h[0].count == 3);

  h = histogram(rmc(7).heights(), 7);
  std::vector<std::uint64_t> counts;
  for (const auto& b : h) counts.push_back(b.count);
  CHECK(counts == std::vector<std::uint64_t>{0, 0, 1, 0, 0, 1, 1});

  CHECK_THROWS_AS(histogram({Rational(1)}, 3), std::invalid_argument);
  CHECK_THROWS_AS(histogram({}, 0), std::invalid_argument);
}

TEST_CASE("greedy depth equals breadth-first minimal depth") {
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (const auto& q : id_set(n)) {
      CAPTURE(to_string(q));
      CHECK(reduce_to_root(q).depth == testing::bfs_min_depth(q));
    }
  }
}

TEST_CASE("root properties") {
  for (std::int64_t n : {1, 7, 30, 97, 360, 1009}) {
    for (const auto& q : id_set(n)) {
      const RootReduction r = reduce_to_root(q);
      const i128 mc = minimal_curvature(r);
      CHECK(mc == std::max<i128>(0, -r.root.min()));
      CHECK(is_descartes(r.root));
      CHECK(int(r.word.length()) == r.depth);
      CHECK(apply_word(q, r.word).min() <= 0);
      CHECK(r.moves_to_root >= r.depth);
      for (int i = 1; i <= 4; ++i) CHECK(apply_move(r.root, i)[i - 1] >= r.root[i - 1]);
    }
  }
}

TEST_CASE("height records") {
  for (std::int64_t n : {1, 2, 7, 30, 97, 210, 1009, 4999}) {
    const RmcResult res = rmc(n, 2);
    CHECK(res.records.size() == enumerate_classes_fast(n).size());
    for (const auto& rec : res.records) {
      CHECK(rec.height == Rational(rec.mc, n));
      CHECK(rec.height >= Rational(0));
      CHECK(rec.height < Rational(1));
      CHECK((rec.depth == 0) == (theta({n, rec.class_form}).min() <= 0));
      REQUIRE(!rec.depth_elements.empty());
      CHECK(rec.depth_elements.size() <= 2);

      // The depth circle containing the root bounds the height, and its row
      // recovers the minimal curvature directly.
      for (const auto& e : rec.depth_elements) {
        const CoefficientQuadruple c = e.coefficients();
        const i128 m = rec.mc;
        CHECK(2 * c.t * m * n - m * m <= i128(n) * n);
        const auto& f = rec.class_form;
        CHECK(c.t * n - c.u * f.a - c.v * f.b - c.w * f.c == m);
      }
    }
  }
}

TEST_CASE("depth and mc are class invariants") {
  std::mt19937_64 rng(77);
  for (std::int64_t n : {7, 30, 97, 360}) {
    for (const auto& q : id_set(n)) {
      const RootReduction base = reduce_to_root(q);
      for (int trial = 0; trial < 20; ++trial) {
        const DescartesQuadruple moved = apply_word(q, testing::random_ap1_word(rng, 8));
        const BqfQuadruple canon = reduce(phi(moved)).form;
        const RootReduction r = reduce_to_root(theta(canon));
        CHECK(minimal_curvature(r) == minimal_curvature(base));
        CHECK(r.depth == base.depth);
        // MC is a packing invariant, so it holds for the translate itself too.
        CHECK(minimal_curvature(reduce_to_root(moved)) == minimal_curvature(base));
      }
    }
  }
}

TEST_CASE("rmc does not depend on thread count") {
  const auto a = rmc(9991, 1).heights();
  CHECK(rmc(9991, 4).heights() == a);
}

TEST_CASE("large entries reduce without hitting the iteration cap") {
  // S4 S3 S4 S3 ... grows only linearly, so the walk back is long.
  DescartesQuadruple q{-1, 2, 2, 3};
  for (int i = 0; i < 2000; ++i) q = apply_move(q, i % 2 == 0 ? 4 : 3);
  const RootReduction r = reduce_to_root(q);
  CHECK(minimal_curvature(r) == 1);
}
