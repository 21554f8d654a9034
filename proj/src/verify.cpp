#include "apollo/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "apollo/class_enum.hpp"
#include "apollo/depth.hpp"
#include "apollo/geometry.hpp"
#include "apollo/staircase.hpp"
#include "apollo/tangency.hpp"

namespace apollo {

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

ApWord random_word(std::mt19937_64& rng, int max_len, bool ap1) {
  std::uniform_int_distribution<int> len(0, max_len), letter(ap1 ? 2 : 1, 4);
  ApWord w;
  const int n = len(rng);
  while (int(w.letters.size()) < n) {
    const int l = letter(rng);
    if (!w.letters.empty() && w.letters.back() == l) continue;
    w.letters.push_back(std::uint8_t(l));
  }
  std::shuffle(w.perm.begin() + (ap1 ? 1 : 0), w.perm.end(), rng);
  return w;
}

std::string check_round_trips() {
  std::mt19937_64 rng(1);
  int count = 0;
  for (const DescartesQuadruple& seed : {DescartesQuadruple{-7, 12, 17, 20}, DescartesQuadruple{0, 0, 1, 1},
                                         DescartesQuadruple{7, -2, 3, 6}}) {
    for (int i = 0; i < 200; ++i, ++count) {
      const DescartesQuadruple q = apply_word(seed, random_word(rng, 8, false));
      expect(is_descartes(q), "word broke the Descartes equation at " + to_string(q));
      expect(theta(phi(q)) == q, "theta(phi(q)) != q for " + to_string(q));
      expect(phi(q).is_valid(), "phi(q) has the wrong discriminant for " + to_string(q));
    }
  }
  return std::to_string(count) + " quadruples";
}

std::string check_orbit_correspondence() {
  std::mt19937_64 rng(2);
  int count = 0;
  for (const DescartesQuadruple& seed : {DescartesQuadruple{-7, 12, 17, 20}, DescartesQuadruple{7, -2, 3, 6}}) {
    for (int i = 0; i < 200; ++i, ++count) {
      const BqfQuadruple q = phi(apply_word(seed, random_word(rng, 8, false)));
      const DescartesQuadruple tq = theta(q);
      expect(theta(gl2_act(Gl2::s(), q)) == apply_move(apply_permutation(tq, transposition(2, 3)), 4), "S");
      expect(theta(gl2_act(Gl2::t(), q)) == apply_permutation(apply_move(tq, 4), transposition(3, 4)), "T");
      expect(theta(gl2_act(Gl2::u(), q)) == apply_move(tq, 4), "U");
      for (const Gl2& g : {Gl2::s(), Gl2::t(), Gl2::u()})
        expect(principal_root(gl2_act(g, q)) == act(g.inverse(), principal_root(q)), "root equivariance");
    }
  }
  return std::to_string(count) + " quadruples";
}

std::string check_canonicalization() {
  std::mt19937_64 rng(3);
  int count = 0;
  for (std::int64_t n : {7, 30, 97, 210}) {
    for (const auto& f : enumerate_classes_fast(n).forms) {
      const DescartesQuadruple q = theta({n, f});
      for (int i = 0; i < 10; ++i, ++count) {
        const DescartesQuadruple moved = apply_word(q, random_word(rng, 8, true));
        expect(reduce(phi(moved)).form.form == f, "Ap_1 translate of " + to_string(q) + " changed class");
      }
    }
  }
  return std::to_string(count) + " translates";
}

std::string check_enumeration() {
  for (std::int64_t n = 1; n <= 300; ++n) {
    expect(enumerate_classes_fast(n).forms == enumerate_classes_naive(n).forms,
           "fast and naive differ at n=" + std::to_string(n));
  }
  return "n <= 300";
}

int min_depth(const DescartesQuadruple& q) {
  if (q.min() <= 0) return 0;
  std::vector<std::pair<DescartesQuadruple, int>> layer{{q, 0}};
  for (int d = 1; d <= 64; ++d) {
    std::vector<std::pair<DescartesQuadruple, int>> next;
    for (const auto& [x, last] : layer) {
      for (int i = 1; i <= 4; ++i) {
        if (i == last) continue;
        const DescartesQuadruple c = apply_move(x, i);
        if (c.min() <= 0) return d;
        if (c[i - 1] < x[i - 1]) next.push_back({c, i});
      }
    }
    layer = std::move(next);
  }
  return -1;
}

std::string check_depth() {
  int count = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (const auto& q : id_set(n)) {
      ++count;
      expect(reduce_to_root(q).depth == min_depth(q), "greedy depth is not minimal for " + to_string(q));
    }
  }
  return std::to_string(count) + " classes with n <= 30";
}

std::string check_height_bound() {
  std::size_t count = 0;
  for (std::int64_t n : {97, 360, 1009}) {
    for (const auto& rec : rmc(n).records) {
      ++count;
      for (const auto& e : rec.depth_elements) {
        const CoefficientQuadruple c = e.coefficients();
        const i128 m = rec.mc;
        expect(2 * c.t * m * n - m * m <= i128(n) * n, "height above its stair for n=" + std::to_string(n));
        const auto& f = rec.class_form;
        expect(c.t * n - c.u * f.a - c.v * f.b - c.w * f.c == m, "depth row does not give mc");
      }
    }
  }
  return std::to_string(count) + " records";
}

std::string check_depth_circles(unsigned threads) {
  const auto circles = strip_circle_bfs(128, threads);
  for (const auto& c : circles) expect(c.coeffs.norm() == 1, "t^2+4v^2-4uw != 1 at " + c.label());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (circles[i].is_half_plane()) continue;
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (circles[j].is_half_plane()) continue;
      ++pairs;
      const Rational dx = circles[i].center_x() - circles[j].center_x();
      const Rational dy = circles[i].center_y() - circles[j].center_y();
      const Rational rs = circles[i].radius() + circles[j].radius();
      expect(dx * dx + dy * dy >= rs * rs, "depth circles overlap: " + circles[i].label() + " " + circles[j].label());
    }
    if (classify_stair(circles[i]) == StairKind::NullMeasure)
      expect(misses_fundamental_domain(circles[i]), "unclassified circle meets the domain: " + circles[i].label());
  }
  return std::to_string(circles.size()) + " circles, " + std::to_string(pairs) + " pairs";
}

std::string check_wk() {
  for (int k = 1; k <= 1000; ++k) {
    const WkData d = wk_data(k);
    expect(d.tangency_x * d.tangency_x + d.tangency_y * d.tangency_y == Rational(1),
           "W_k tangency point off the unit circle at k=" + std::to_string(k));
    if (k <= 30) expect(coefficient_quadruple(d.word, d.word.letters.front()) == d.coeffs, "W_k closed form");
  }
  return "k <= 1000";
}

std::string check_table(unsigned threads) {
  const StaircaseModel m = build_staircase(50, threads);
  const double widths[] = {1, 0.0717967697, 0.0294372515, 0.0161332303, 0.0102051443, 0.0102051443};
  const double heights[] = {0.9549296586, 0.2886751346, 0.3535533906, 0.1936491673, 0.2449489743, 0.1224744871};
  expect(m.stairs().size() == 6, "expected six stairs up to t=50");
  for (int i = 0; i < 6; ++i) {
    expect(std::abs(m.stairs()[i].width - widths[i]) < 5e-11, "width of stair " + std::to_string(i));
    expect(std::abs(m.stairs()[i].height() - heights[i]) < 5e-11, "height of stair " + std::to_string(i));
  }
  const double mass = build_staircase(100, threads).mass();
  expect(mass >= 0.99 && mass <= 1 + 1e-9, "mass at t=100 out of range");
  std::ostringstream os;
  os << "mass(100)=" << mass;
  return os.str();
}

std::string check_local_factors() {
  int count = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int f = 0; f <= 2; ++f) {
      std::int64_t pf = 1;
      for (int i = 0; i < f; ++i) pf *= std::int64_t(p);
      for (std::int64_t m = 1; m <= 10; ++m) {
        for (int e = 1; e <= 4; ++e, ++count) {
          const std::int64_t c = pf * m;
          expect(sp_closed_form(p, e, c) == sp_bruteforce(p, e, c), "s_p mismatch");
        }
      }
    }
  }
  for (std::int64_t c1 = 1; c1 <= 40; ++c1) {
    for (std::int64_t c2 = -c1 + 1; c2 <= 40; ++c2) {
      const Rational d = Rational(tangency_bruteforce(c1, c2)) - tangency_estimate(c1, c2);
      expect(d >= Rational(0) && d <= Rational(1), "tangency bound fails");
    }
  }
  return std::to_string(count) + " local factors";
}

std::string check_rmc0(unsigned threads) {
  for (std::int64_t n = 1; n <= 150; ++n) {
    const auto mult = rmc0(n, threads);
    std::int64_t bottom = 0;
    for (const auto& rec : rmc(n).records) bottom += rec.touches_outer_circle() ? 1 : 0;
    expect(std::accumulate(mult.begin(), mult.end(), std::int64_t(0)) == bottom,
           "bottom-stair count differs at n=" + std::to_string(n));
  }
  return "n <= 150";
}

std::string check_packing() {
  const Scene s = render_packing({-7, 12, 17, 20}, 200);
  const auto& c = s.circles;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double d = std::hypot(c[i].x - c[j].x, c[i].y - c[j].y);
      const double tol = 1e-9 * (1 + c[i].r + c[j].r);
      const bool ok = (c[i].curvature < 0 || c[j].curvature < 0)
                          ? d + std::min(c[i].r, c[j].r) <= std::max(c[i].r, c[j].r) + tol
                          : d >= c[i].r + c[j].r - tol;
      expect(ok, "packing circles overlap: " + c[i].label + " " + c[j].label);
    }
  }
  return std::to_string(c.size()) + " circles";
}

}  // namespace

std::vector<CheckResult> run_verify_suite(unsigned threads) {
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"theta-constants", [] {
         if (!theta_constants_consistent()) throw Failure{"S_theta Q_theta S_theta^T != Q_D"};
         return std::string("ok");
       }},
      {"round-trips", check_round_trips},
      {"orbit-correspondence", check_orbit_correspondence},
      {"canonicalization", check_canonicalization},
      {"enumeration-oracle", check_enumeration},
      {"depth-oracle", check_depth},
      {"height-bound", check_height_bound},
      {"depth-circles", [threads] { return check_depth_circles(threads); }},
      {"wk-tangency", check_wk},
      {"stair-table", [threads] { return check_table(threads); }},
      {"local-factors", check_local_factors},
      {"bottom-stair-count", [threads] { return check_rmc0(threads); }},
      {"packing-overlap", check_packing},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = fn();
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace apollo
