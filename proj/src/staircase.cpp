#include "apollo/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>

#include "apollo/parallel.hpp"

namespace apollo {

Rational DepthCircle::center_x() const { return Rational(coeffs.v, coeffs.w); }
Rational DepthCircle::center_y() const { return Rational(coeffs.t, checked_mul(2, coeffs.w)); }
Rational DepthCircle::radius() const { return Rational(1, checked_mul(2, coeffs.w)); }

std::string DepthCircle::label() const {
  return word.letters.empty() ? "Id" + std::to_string(row) : to_string(word);
}

namespace {

using Rows = std::array<std::array<i128, 4>, 4>;

struct Node {
  Rows rows;
  std::vector<std::uint8_t> letters;  // matrix order
  std::uint8_t last = 0;              // most recent move, 0 at the start
};

Node start_node() {
  Node n;
  n.rows = theta_matrix();
  return n;
}

Node child(const Node& parent, int i) {
  Node c;
  c.rows = parent.rows;
  for (int col = 0; col < 4; ++col) {
    i128 others = 0;
    for (int k = 0; k < 4; ++k) {
      if (k != i - 1) others = checked_add(others, parent.rows[k][col]);
    }
    c.rows[i - 1][col] = checked_sub(checked_mul(2, others), parent.rows[i - 1][col]);
  }
  c.letters.reserve(parent.letters.size() + 1);
  c.letters.push_back(std::uint8_t(i));
  c.letters.insert(c.letters.end(), parent.letters.begin(), parent.letters.end());
  c.last = std::uint8_t(i);
  return c;
}

DepthCircle circle_of(const Node& n, int row) {
  return {coefficient_from_row(n.rows[row - 1]), ApWord(n.letters), row};
}

std::vector<DepthCircle> initial_circles() {
  const Node s = start_node();
  std::vector<DepthCircle> out;
  for (int j = 1; j <= 4; ++j) out.push_back(circle_of(s, j));
  return out;
}

bool circle_order(const DepthCircle& a, const DepthCircle& b) {
  const auto& x = a.coeffs;
  const auto& y = b.coeffs;
  if (x.t != y.t) return x.t < y.t;
  if (x.v != y.v) return x.v < y.v;
  if (x.w != y.w) return x.w < y.w;
  return x.u < y.u;
}

}  // namespace

std::vector<DepthCircle> strip_circle_bfs(std::int64_t w_max, unsigned threads) {
  if (w_max < 1) throw std::invalid_argument("strip_circle_bfs: w_max must be >= 1");
  std::vector<DepthCircle> out = initial_circles();

  // Moves S3/S4 on the start would create unit circles outside -1 <= x <= 0;
  // every circle in the window descends from S1 (top gap) or S2 (bottom gap).
  std::vector<Node> frontier;
  for (int i : {1, 2}) {
    Node c = child(start_node(), i);
    if (c.rows[i - 1][3] <= w_max) frontier.push_back(std::move(c));
  }

  while (!frontier.empty()) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(frontier.size(), 8 * threads));
    std::vector<std::vector<DepthCircle>> emitted(chunks);
    std::vector<std::vector<Node>> next(chunks);
    parallel_chunks(0, std::int64_t(frontier.size()), chunks, threads,
                    [&](std::size_t k, std::int64_t lo, std::int64_t hi) {
                      for (std::int64_t idx = lo; idx < hi; ++idx) {
                        const Node& node = frontier[idx];
                        emitted[k].push_back(circle_of(node, node.last));
                        for (int i = 1; i <= 4; ++i) {
                          if (i == node.last) continue;
                          Node c = child(node, i);
                          const i128 w_new = c.rows[i - 1][3];
                          for (int r = 0; r < 4; ++r) {
                            if (r != i - 1 && c.rows[r][3] >= w_new)
                              throw std::logic_error("strip_circle_bfs: child w does not exceed its parents");
                          }
                          if (w_new <= w_max) next[k].push_back(std::move(c));
                        }
                      }
                    });
    frontier.clear();
    for (std::size_t k = 0; k < chunks; ++k) {
      for (auto& c : emitted[k]) out.push_back(std::move(c));
      for (auto& n : next[k]) frontier.push_back(std::move(n));
    }
  }

  std::sort(out.begin(), out.end(), circle_order);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DepthCircle& a, const DepthCircle& b) { return a.coeffs == b.coeffs; }),
            out.end());
  return out;
}

std::vector<DepthCircle> depth_circles_by_length(int max_length) {
  if (max_length < 0) throw std::invalid_argument("depth_circles_by_length: negative length");
  std::vector<DepthCircle> out = initial_circles();
  std::vector<Node> frontier{start_node()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int i = 1; i <= 4; ++i) {
        if (i == node.last) continue;
        Node c = child(node, i);
        out.push_back(circle_of(c, i));
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

const char* to_string(StairKind k) {
  switch (k) {
    case StairKind::Bottom: return "bottom";
    case StairKind::Sixth: return "sixth";
    case StairKind::Half: return "half";
    case StairKind::Full: return "full";
    case StairKind::NullMeasure: return "null";
  }
  return "?";
}

namespace {

bool is_wk_closed_form(const CoefficientQuadruple& c, i128 min_k) {
  const i128 m = -c.v;  // k + 1
  if (m < min_k + 1) return false;
  const i128 m2 = checked_mul(m, m);
  return c.t == 2 * m2 - 1 && c.u == m2 && c.w == m2;
}

}  // namespace

StairKind classify_stair(const DepthCircle& c) {
  const auto& q = c.coeffs;
  if (q.w == 0) {
    return (q == CoefficientQuadruple{1, 1, 0, 0}) ? StairKind::Bottom : StairKind::NullMeasure;
  }
  if (q == CoefficientQuadruple{7, 4, -2, 4}) return StairKind::Sixth;
  if (is_wk_closed_form(q, 2)) return StairKind::Half;

  const Rational x = c.center_x(), y = c.center_y(), r = c.radius();
  const Rational half(1, 2), one(1);
  const bool inside_band = x - r >= -half && x + r <= Rational(0);
  const bool outside_unit = x * x + y * y >= (one + r) * (one + r);
  const bool below_top = y + r <= one;
  return (inside_band && outside_unit && below_top) ? StairKind::Full : StairKind::NullMeasure;
}

bool misses_fundamental_domain(const DepthCircle& c) {
  const auto& q = c.coeffs;
  if (q.w == 0) return q.t < 0;  // Id_1: y <= 0
  const Rational x = c.center_x(), y = c.center_y(), r = c.radius();
  const Rational half(1, 2), one(1);
  if (x + r <= -half) return true;
  if (x - r >= Rational(0)) return true;
  return r <= one && x * x + y * y <= (one - r) * (one - r);
}

int stair_weight(StairKind k) {
  switch (k) {
    case StairKind::Sixth: return 2;
    case StairKind::Half: return 6;
    case StairKind::Full: return 12;
    default: return 0;
  }
}

double stair_width(double t) { return 1.0 / (t + std::sqrt(t * t - 1.0)); }

std::string Stair::label() const {
  if (kind == StairKind::Bottom) return "Id2";
  return to_string(word);
}

StaircaseModel::StaircaseModel(std::int64_t t_max, std::vector<Stair> stairs)
    : t_max_(t_max), stairs_(std::move(stairs)) {
  for (const auto& s : stairs_) mass_ += s.probability;
}

double StaircaseModel::density(double x) const {
  if (!(x > 0.0) || x > 1.0) return 0.0;
  double d = 0;
  for (const auto& s : stairs_) {
    if (s.width >= x) d += s.height();
  }
  return d;
}

double StaircaseModel::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  double c = 0;
  for (const auto& s : stairs_) c += s.probability * std::min(x, s.width) / s.width;
  return c;
}

double histogram_l1_distance(const StaircaseModel& model, const std::vector<HistogramBin>& bins) {
  std::uint64_t total = 0;
  for (const auto& b : bins) total += b.count;
  if (total == 0) throw std::invalid_argument("histogram_l1_distance: empty histogram");
  double dist = 0;
  for (const auto& b : bins) {
    const double expect = model.cdf(b.hi.to_double()) - model.cdf(b.lo.to_double());
    dist += std::abs(double(b.count) / double(total) - expect);
  }
  return dist;
}

StaircaseModel build_staircase(std::int64_t t_max, unsigned threads) {
  if (t_max < 1) throw std::invalid_argument("build_staircase: t_max must be >= 1");
  // Circles meeting F reach y >= sqrt(3)/2, hence w <= (t + 1)/sqrt(3) <= t_max.
  const auto circles = strip_circle_bfs(std::max<std::int64_t>(1, t_max), threads);

  std::map<std::pair<i128, int>, Stair> by_key;  // (t, -weight)
  for (const auto& c : circles) {
    if (c.coeffs.t > t_max) continue;
    const StairKind kind = classify_stair(c);
    if (kind == StairKind::NullMeasure) continue;
    const int weight = stair_weight(kind);
    auto [it, inserted] = by_key.try_emplace({c.coeffs.t, -weight});
    Stair& s = it->second;
    if (inserted) {
      s.t = c.coeffs.t;
      s.kind = kind;
      s.weight = weight;
      s.word = c.word;
      s.coeffs = c.coeffs;
      const double t = double(c.coeffs.t);
      s.width = kind == StairKind::Bottom ? 1.0 : stair_width(t);
    }
    ++s.multiplicity;
    if (kind == StairKind::Bottom) {
      s.probability = 3.0 / std::numbers::pi;
    } else {
      const double t = double(c.coeffs.t);
      s.probability = s.multiplicity * weight * s.width / std::sqrt(t * t - 1.0);
    }
  }
  std::vector<Stair> stairs;
  for (auto& [key, s] : by_key) stairs.push_back(std::move(s));
  return StaircaseModel(t_max, std::move(stairs));
}

void write_stair_table_csv(std::ostream& os, const StaircaseModel& model) {
  os << "word,t,width,height,d_W\n";
  char buf[160];
  for (const auto& s : model.stairs()) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.10f,%.10f,%.10f\n", s.label().c_str(), to_string(s.t).c_str(),
                  s.width, s.height(), s.probability);
    os << buf;
  }
}

WkData wk_data(int k) {
  if (k < 1) throw std::invalid_argument("wk_data: k must be >= 1");
  const i128 m = k + 1;
  WkData d;
  d.coeffs = {2 * m * m - 1, m * m, -m, m * m};
  // Matrix order: the leftmost letter is S1 for odd k, S4 for even k.
  for (int i = k; i >= 1; --i) d.word.letters.push_back(i % 2 == 1 ? 1 : 4);
  const i128 kk = k;
  const i128 den = 2 * kk * kk + 6 * kk + 5;
  d.tangency_x = Rational(-(2 * kk + 3), den);
  d.tangency_y = Rational(2 * kk * kk + 6 * kk + 4, den);
  return d;
}

FloatCircle epsilon_circle(const CoefficientQuadruple& c, double eps) {
  if (c.t <= 1 || c.w <= 0) throw std::invalid_argument("epsilon_circle: requires t > 1 and w > 0");
  const double t = double(c.t), w = double(c.w);
  const double s = std::sqrt(t * t - 1.0);
  const double eps_max = stair_width(t);
  if (!(eps >= 0.0) || eps > eps_max * (1.0 + 1e-12))
    throw std::invalid_argument("epsilon_circle: eps outside [0, t - sqrt(t^2-1)]");
  FloatCircle out;
  out.x = double(c.v) / w;
  out.y = (s + eps) / (2.0 * w);
  out.r = std::sqrt(eps * eps + 2.0 * eps * s) / (2.0 * w);
  return out;
}

}  // namespace apollo
