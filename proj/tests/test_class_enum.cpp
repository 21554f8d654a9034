#include "doctest.h"

#include <random>

#include "apollo/class_enum.hpp"
#include "oracles.hpp"

using namespace apollo;

namespace {

std::vector<BinaryQuadraticForm> forms(std::initializer_list<BinaryQuadraticForm> l) { return l; }

}  // namespace

TEST_CASE("naive enumeration examples") {
  CHECK(enumerate_classes_naive(1).forms == forms({{1, 0, 1}}));
  CHECK(enumerate_classes_naive(2).forms == forms({{1, 0, 4}}));
  CHECK(enumerate_classes_naive(7).forms == forms({{1, 0, 49}, {2, 2, 25}, {5, 2, 10}}));
  CHECK_THROWS_AS(enumerate_classes_naive(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes_naive(kNaiveEnumerationLimit + 1), std::invalid_argument);
}

TEST_CASE("fast enumeration examples") {
  CHECK(enumerate_classes_fast(1).forms == forms({{1, 0, 1}}));
  CHECK(enumerate_classes_fast(7).forms == forms({{1, 0, 49}, {2, 2, 25}, {5, 2, 10}}));
  CHECK(enumerate_classes_fast(97).size() == enumerate_classes_naive(97).size());
  CHECK_THROWS_AS(enumerate_classes_fast(0), std::invalid_argument);
}

TEST_CASE("fast and naive agree") {
  for (std::int64_t n = 1; n <= 400; ++n) {
    CAPTURE(n);
    CHECK(enumerate_classes_fast(n).forms == enumerate_classes_naive(n).forms);
  }
}

TEST_CASE("fast enumeration does not depend on thread count") {
  for (std::int64_t n : {1, 7, 360, 9991, 100003}) {
    const auto one = enumerate_classes_fast(n, 1).forms;
    CHECK(enumerate_classes_fast(n, 3).forms == one);
    CHECK(enumerate_classes_fast(n, 8).forms == one);
  }
}

TEST_CASE("class list invariants") {
  for (std::int64_t n : {1, 2, 6, 7, 12, 30, 97, 210, 1001}) {
    const ClassList cl = enumerate_classes_fast(n);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      const auto& f = cl.forms[i];
      CHECK(f.is_reduced());
      CHECK(f.discriminant() == -4 * i128(n) * n);
      CHECK(gcd128(gcd128(f.a, f.b), f.c) == 1);
      if (i > 0) CHECK(cl.forms[i - 1] < f);
    }
  }
}

TEST_CASE("id_set") {
  const auto seven = id_set(7);
  CHECK(std::find(seven.begin(), seven.end(), DescartesQuadruple(7, -2, 3, 6)) != seven.end());
  CHECK(id_set(1) == std::vector<DescartesQuadruple>{{1, 0, 0, 1}});
  CHECK(id_set(2) == std::vector<DescartesQuadruple>{{2, -1, 2, 3}});
  for (std::int64_t n : {5, 12, 60, 143}) {
    for (const auto& q : id_set(n)) {
      CHECK(q[0] == n);
      CHECK(is_descartes(q));
      CHECK(is_primitive(q));
    }
  }
}

TEST_CASE("Ap_1 translates canonicalize to their class") {
  std::mt19937_64 rng(42);
  for (std::int64_t n : {1, 2, 7, 12, 30, 97, 105}) {
    const ClassList cl = enumerate_classes_fast(n);
    for (const auto& f : cl.forms) {
      const DescartesQuadruple q = theta({n, f});
      for (int trial = 0; trial < 30; ++trial) {
        const DescartesQuadruple moved = apply_word(q, testing::random_ap1_word(rng, 8));
        REQUIRE(moved[0] == n);
        CHECK(reduce(phi(moved)).form.form == f);
      }
    }
  }
}

TEST_CASE("every primitive n-quadruple lands in the class list") {
  // Forms with gcd(A,B,C) > 1 never come from primitive quadruples.
  for (std::int64_t n = 1; n <= 60; ++n) {
    const ClassList cl = enumerate_classes_naive(n);
    for (i128 a = 1; a <= 2 * n; ++a) {
      for (i128 b = 0; b <= a; b += 2) {
        const i128 num = b * b + 4 * i128(n) * n;
        if (num % (4 * a) != 0) continue;
        const i128 c = num / (4 * a);
        if (c < a) continue;
        const BqfQuadruple q{n, {a, b, c}};
        const bool listed = std::find(cl.forms.begin(), cl.forms.end(), q.form) != cl.forms.end();
        CHECK(listed == q.is_primitive());
        CHECK(listed == (gcd128(gcd128(a, b), c) == 1));
      }
    }
  }
}
