#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apollo/bqf.hpp"
#include "apollo/depth.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// The disk D_W of principal roots with depth element W. For w > 0 it is the
/// closed disk with center (v/w, t/(2w)) and radius 1/(2w); rows with w = 0 are
/// the half-planes y <= 0 (Id_1) and y >= 1 (Id_2).
struct DepthCircle {
  CoefficientQuadruple coeffs;
  ApWord word;  // empty for Id_j
  int row = 0;  // j: the row of W * S_theta the circle comes from

  bool is_half_plane() const { return coeffs.w == 0; }
  Rational center_x() const;
  Rational center_y() const;
  Rational radius() const;
  std::string label() const;  // "Id2", "S4S1", ...
};

/// Depth circles of the strip packing in the period window -1 <= x <= 0
/// (the four circles of the starting configuration and everything nested
/// between them), complete for w <= w_max. Sorted by (t, v, w).
std::vector<DepthCircle> strip_circle_bfs(std::int64_t w_max, unsigned threads = 1);

/// All depth circles whose word has length <= max_length (no window restriction).
std::vector<DepthCircle> depth_circles_by_length(int max_length);

enum class StairKind { Bottom, Sixth, Half, Full, NullMeasure };

const char* to_string(StairKind k);

/// How D_W meets the fundamental domain F = {-1/2 <= x <= 0, x^2 + y^2 >= 1}.
StairKind classify_stair(const DepthCircle& c);

/// True when D_W provably has no positive-area overlap with F, i.e. it lies
/// left of x = -1/2, right of x = 0, inside the closed unit disk, or is the
/// half-plane y <= 0. Tangency is allowed.
bool misses_fundamental_domain(const DepthCircle& c);

/// a_W: 2 for Sixth, 6 for Half, 12 for Full, 0 otherwise.
int stair_weight(StairKind k);

/// t - sqrt(t^2 - 1), evaluated without cancellation.
double stair_width(double t);

struct Stair {
  i128 t = 0;
  StairKind kind = StairKind::NullMeasure;
  int weight = 0;        // a_W, 0 for the bottom stair
  int multiplicity = 0;  // distinct depth circles sharing (t, kind)
  double width = 0;      // t - sqrt(t^2 - 1)
  double probability = 0;  // d_W summed over the multiplicity
  ApWord word;             // first depth element in (t, v, w) order
  CoefficientQuadruple coeffs;

  double height() const { return probability / width; }
  std::string label() const;
};

class StaircaseModel {
 public:
  StaircaseModel() = default;
  StaircaseModel(std::int64_t t_max, std::vector<Stair> stairs);

  std::int64_t t_max() const { return t_max_; }
  const std::vector<Stair>& stairs() const { return stairs_; }
  double mass() const { return mass_; }

  /// Sum of stair heights over stairs with width >= x; 0 outside (0, 1].
  double density(double x) const;
  /// Integral of density over [0, x].
  double cdf(double x) const;

 private:
  std::int64_t t_max_ = 0;
  std::vector<Stair> stairs_;
  double mass_ = 0;
};

/// Stairs for every depth element with t <= t_max that meets F in positive
/// measure, ordered by t (larger a_W first on ties).
/// Sum over bins of |observed fraction - model mass in the bin|.
double histogram_l1_distance(const StaircaseModel& model, const std::vector<HistogramBin>& bins);

StaircaseModel build_staircase(std::int64_t t_max, unsigned threads = 1);

/// Columns word,t,width,height,d_W.
void write_stair_table_csv(std::ostream& os, const StaircaseModel& model);

struct WkData {
  CoefficientQuadruple coeffs;
  ApWord word;                 // W_k = ...S4S1, alternating, rightmost S1
  Rational tangency_x, tangency_y;  // D_{W_k} meets D_{W_{k+1}} here
};

WkData wk_data(int k);

struct FloatCircle {
  double x = 0, y = 0, r = 0;
};

/// The epsilon-circle: center (v/w, (sqrt(t^2-1) + eps)/(2w)) and squared radius
/// (eps^2 + 2 eps sqrt(t^2-1)) / (4w^2). Requires t > 1 and
/// 0 <= eps <= t - sqrt(t^2-1); throws std::invalid_argument otherwise.
FloatCircle epsilon_circle(const CoefficientQuadruple& c, double eps);

}  // namespace apollo
