#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apollo/bqf.hpp"
#include "apollo/descartes.hpp"
#include "apollo/staircase.hpp"

namespace apollo {

struct SceneCircle {
  double x = 0, y = 0, r = 0;
  std::string kind;   // stroke class: "depth", "packing", "epsilon", ...
  std::string label;
  // Exact "p/q" coordinates when the geometry is rational; empty otherwise.
  std::string exact_x, exact_y, exact_r;
  long long curvature = 0;  // packing circles only
};

/// Horizontal boundary of a half-plane depth circle (y <= value or y >= value).
struct SceneLine {
  double y = 0;
  bool below = true;  // region is y <= value
  std::string kind;
  std::string label;
};

struct SceneSegment {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::string kind;
};

struct ScenePoint {
  double x = 0, y = 0;
  std::string kind;
};

struct Viewport {
  double x_min = -1, y_min = -1, x_max = 1, y_max = 1;
};

struct Scene {
  std::vector<SceneCircle> circles;
  std::vector<SceneLine> lines;
  std::vector<SceneSegment> segments;
  std::vector<ScenePoint> points;
  Viewport viewport;
};

/// D_W for every depth element with word length <= max_depth, labeled.
Scene render_depth_circles(int max_depth);

/// Circles of the packing generated by q with curvature <= max_curvature,
/// placed by the complex Descartes recursion from the root quadruple: outer
/// circle at the origin, first inner circle on the positive real axis, the
/// next with positive imaginary part. Throws std::invalid_argument unless the
/// packing is bounded.
Scene render_packing(const DescartesQuadruple& q, long long max_curvature);

/// D_W outline plus its epsilon-circles and their centers.
Scene render_epsilon_circles(const CoefficientQuadruple& c, const std::vector<double>& eps_list);

/// The fundamental domain boundary: x = -1/2, x = 0 and the unit circle.
void add_fundamental_domain(Scene& scene);

struct SvgOptions {
  int width_px = 800;
  double label_min_radius_px = 10.0;
};

void write_svg(std::ostream& os, const Scene& scene, const SvgOptions& opts = {});

/// Columns kind,x,y,r,label. Rational geometry is written as "p/q".
void write_circle_csv(std::ostream& os, const Scene& scene);

}  // namespace apollo
