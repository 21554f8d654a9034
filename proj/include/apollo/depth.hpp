#pragma once

#include <cstdint>
#include <vector>

#include "apollo/bqf.hpp"
#include "apollo/class_enum.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// Either Id_j (identity_position = j in 1..4) or a non-identity reduced word.
struct DepthElement {
  int identity_position = 0;
  ApWord word;

  static DepthElement identity(int j) { return {j, {}}; }
  static DepthElement from_word(ApWord w) { return {0, std::move(w)}; }

  bool is_identity() const { return identity_position != 0; }
  /// j for Id_j, otherwise the leading (leftmost) letter of the word.
  int position() const { return is_identity() ? identity_position : word.letters.front(); }
  /// Coefficient quadruple (t, u, v, w) of the depth circle D_W.
  CoefficientQuadruple coefficients() const;

  friend bool operator==(const DepthElement&, const DepthElement&) = default;
};

std::string to_string(const DepthElement& e);

struct RootReduction {
  DescartesQuadruple root;
  /// Moves up to the first quadruple with a non-positive entry, as a matrix
  /// product (leftmost letter = last move applied).
  ApWord word;
  int depth = 0;
  /// Total moves to reach the root, which is >= depth.
  int moves_to_root = 0;
};

/// Greedy walk: repeatedly replace the largest entry (lowest index on ties)
/// by its Vieta partner while that strictly decreases it. Throws
/// std::invalid_argument for non-Descartes input and std::runtime_error if
/// the iteration cap is exceeded.
RootReduction reduce_to_root(const DescartesQuadruple& q);

/// Word if depth > 0; otherwise Id_j for every non-positive position j.
std::vector<DepthElement> depth_elements(const DescartesQuadruple& q);
std::vector<DepthElement> depth_elements(const DescartesQuadruple& q, const RootReduction& r);

/// Negative of the minimal curvature, or 0 for strip and half-plane packings.
i128 minimal_curvature(const RootReduction& r);

struct HeightRecord {
  BinaryQuadraticForm class_form;
  DescartesQuadruple root;
  i128 mc = 0;
  int depth = 0;
  std::vector<DepthElement> depth_elements;
  Rational height;  // mc / n

  bool touches_outer_circle() const;  // Id_2 among the depth elements
};

HeightRecord height_record(std::int64_t n, const BinaryQuadraticForm& f);

struct RmcResult {
  std::int64_t n = 0;
  std::vector<HeightRecord> records;  // in class-list order

  std::vector<Rational> heights() const;
};

RmcResult rmc(const ClassList& classes, unsigned threads = 1);
RmcResult rmc(std::int64_t n, unsigned threads = 1);

struct HistogramBin {
  Rational lo, hi;
  std::uint64_t count = 0;
};

/// Bin k covers [k/bins, (k+1)/bins). Values must lie in [0, 1).
std::vector<HistogramBin> histogram(const std::vector<Rational>& values, int bins);

}  // namespace apollo
