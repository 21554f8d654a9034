#include "apollo/depth.hpp"

#include <stdexcept>

#include "apollo/parallel.hpp"

namespace apollo {

CoefficientQuadruple DepthElement::coefficients() const {
  return is_identity() ? coefficient_quadruple(ApWord{}, identity_position)
                       : coefficient_quadruple(word, word.letters.front());
}

std::string to_string(const DepthElement& e) {
  if (e.is_identity()) return "Id" + std::to_string(e.identity_position);
  return to_string(e.word);
}

namespace {

// Reduction of an integral quadruple takes O(sqrt(max)) moves in the worst
// case (chains of circles accumulating at a tangency point).
long iteration_cap(const DescartesQuadruple& q) {
  i128 m = 0;
  for (i128 v : q.c) m = std::max(m, abs128(v));
  int half_bits = (bit_length(m) + 1) / 2;
  return 64 + (half_bits >= 40 ? (1L << 41) : (2L << half_bits));
}

}  // namespace

RootReduction reduce_to_root(const DescartesQuadruple& q) {
  if (!is_descartes(q)) throw std::invalid_argument("reduce_to_root: not a Descartes quadruple " + to_string(q));
  RootReduction r;
  r.root = q;
  std::vector<std::uint8_t> applied;
  bool found = q.min() <= 0;
  const long cap = iteration_cap(q);
  for (long iter = 0;; ++iter) {
    if (iter > cap) throw std::runtime_error("reduce_to_root: iteration cap exceeded for " + to_string(q));
    int imax = 0;
    for (int k = 1; k < 4; ++k) {
      if (r.root[k] > r.root[imax]) imax = k;
    }
    DescartesQuadruple next = apply_move(r.root, imax + 1);
    if (next[imax] >= r.root[imax]) break;
    r.root = next;
    ++r.moves_to_root;
    if (!found) {
      applied.push_back(std::uint8_t(imax + 1));
      if (next[imax] <= 0) {
        found = true;
        r.depth = int(applied.size());
      }
    }
  }
  if (!found) throw std::runtime_error("reduce_to_root: no non-positive curvature reached from " + to_string(q));
  r.word.letters.assign(applied.rbegin(), applied.rend());
  return r;
}

std::vector<DepthElement> depth_elements(const DescartesQuadruple& q, const RootReduction& r) {
  std::vector<DepthElement> out;
  if (r.depth > 0) {
    out.push_back(DepthElement::from_word(r.word));
    return out;
  }
  for (int j = 0; j < 4; ++j) {
    if (q[j] <= 0) out.push_back(DepthElement::identity(j + 1));
  }
  return out;
}

std::vector<DepthElement> depth_elements(const DescartesQuadruple& q) {
  return depth_elements(q, reduce_to_root(q));
}

i128 minimal_curvature(const RootReduction& r) {
  i128 m = r.root.min();
  return m < 0 ? -m : 0;
}

bool HeightRecord::touches_outer_circle() const {
  for (const auto& e : depth_elements) {
    if (e.is_identity() && e.identity_position == 2) return true;
  }
  return false;
}

HeightRecord height_record(std::int64_t n, const BinaryQuadraticForm& f) {
  if (n < 1) throw std::invalid_argument("height_record: n must be positive");
  const DescartesQuadruple q = theta({n, f});
  const RootReduction r = reduce_to_root(q);
  HeightRecord rec;
  rec.class_form = f;
  rec.root = r.root;
  rec.mc = minimal_curvature(r);
  rec.depth = r.depth;
  rec.depth_elements = depth_elements(q, r);
  rec.height = Rational(rec.mc, n);
  return rec;
}

std::vector<Rational> RmcResult::heights() const {
  std::vector<Rational> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.height);
  return out;
}

RmcResult rmc(const ClassList& classes, unsigned threads) {
  RmcResult out{classes.n, std::vector<HeightRecord>(classes.size())};
  const std::size_t chunks = std::max<std::size_t>(1, 8 * std::size_t(threads));
  parallel_chunks(0, std::int64_t(classes.size()), chunks, threads,
                  [&](std::size_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t i = lo; i < hi; ++i)
                      out.records[i] = height_record(classes.n, classes.forms[i]);
                  });
  return out;
}

RmcResult rmc(std::int64_t n, unsigned threads) { return rmc(enumerate_classes_fast(n, threads), threads); }

std::vector<HistogramBin> histogram(const std::vector<Rational>& values, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  std::vector<HistogramBin> out(bins);
  for (int k = 0; k < bins; ++k) out[k] = {Rational(k, bins), Rational(k + 1, bins), 0};
  for (const Rational& v : values) {
    if (v.sign() < 0 || v >= Rational(1)) throw std::invalid_argument("histogram: value outside [0, 1): " + v.str());
    i128 k = floor_div(checked_mul(v.num(), bins), v.den());
    ++out[std::size_t(k)].count;
  }
  return out;
}

}  // namespace apollo
