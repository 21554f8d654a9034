#include "apollo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "apollo/depth.hpp"

namespace apollo {

namespace {

using Complex = std::complex<long double>;

SceneCircle depth_circle_shape(const DepthCircle& c) {
  SceneCircle s;
  s.x = c.center_x().to_double();
  s.y = c.center_y().to_double();
  s.r = c.radius().to_double();
  s.kind = "depth";
  s.label = c.label();
  s.exact_x = c.center_x().str();
  s.exact_y = c.center_y().str();
  s.exact_r = c.radius().str();
  return s;
}

void fit_viewport(Scene& scene, double margin) {
  bool any = false;
  Viewport v{};
  auto include = [&](double x0, double y0, double x1, double y1) {
    if (!any) {
      v = {x0, y0, x1, y1};
      any = true;
      return;
    }
    v.x_min = std::min(v.x_min, x0);
    v.y_min = std::min(v.y_min, y0);
    v.x_max = std::max(v.x_max, x1);
    v.y_max = std::max(v.y_max, y1);
  };
  for (const auto& c : scene.circles) include(c.x - c.r, c.y - c.r, c.x + c.r, c.y + c.r);
  for (const auto& s : scene.segments)
    include(std::min(s.x1, s.x2), std::min(s.y1, s.y2), std::max(s.x1, s.x2), std::max(s.y1, s.y2));
  for (const auto& p : scene.points) include(p.x, p.y, p.x, p.y);
  for (const auto& l : scene.lines) include(v.x_min, l.y, v.x_max, l.y);
  if (!any) return;
  const double dx = (v.x_max - v.x_min) * margin, dy = (v.y_max - v.y_min) * margin;
  scene.viewport = {v.x_min - dx, v.y_min - dy, v.x_max + dx, v.y_max + dy};
}

// Curvature-center pairs (k, k * center) of a Descartes configuration.
struct Config {
  std::array<i128, 4> k;
  std::array<Complex, 4> z;
};

Config place_root(const DescartesQuadruple& root) {
  int outer = 0;
  for (int i = 1; i < 4; ++i) {
    if (root[i] < root[outer]) outer = i;
  }
  std::array<int, 4> order{outer, 0, 0, 0};
  for (int i = 0, j = 1; i < 4; ++i) {
    if (i != outer) order[j++] = i;
  }
  Config cfg;
  for (int i = 0; i < 4; ++i) cfg.k[i] = root[order[i]];

  const long double big_r = 1.0L / (long double)(-cfg.k[0]);
  const long double rb = 1.0L / (long double)cfg.k[1], rc = 1.0L / (long double)cfg.k[2];
  const Complex cb(big_r - rb, 0);
  const long double d0 = big_r - rc, d1 = rb + rc;
  const long double xc = (d0 * d0 - d1 * d1 + cb.real() * cb.real()) / (2 * cb.real());
  const Complex cc(xc, std::sqrt(std::max(0.0L, d0 * d0 - xc * xc)));

  const long double kb = (long double)cfg.k[1], kc = (long double)cfg.k[2];
  const long double kd = (long double)cfg.k[3];
  const Complex za(0, 0), zb = kb * cb, zc = kc * cc;
  const Complex root_term = 2.0L * std::sqrt(za * zb + zb * zc + zc * za);
  const long double rd = 1.0L / kd;
  auto residual = [&](Complex zd) {
    const Complex cd = zd / kd;
    return std::abs(std::abs(cd) - (big_r - rd)) + std::abs(std::abs(cd - cb) - (rb + rd)) +
           std::abs(std::abs(cd - cc) - (rc + rd));
  };
  const Complex s = za + zb + zc;
  const Complex zd = residual(s + root_term) <= residual(s - root_term) ? s + root_term : s - root_term;
  cfg.z = {za, zb, zc, zd};
  return cfg;
}

SceneCircle packing_circle(i128 k, Complex z) {
  SceneCircle c;
  const long double kk = (long double)k;
  c.x = double(z.real() / kk);
  c.y = double(z.imag() / kk);
  c.r = double(1.0L / std::abs(kk));
  c.kind = k < 0 ? "outer" : "packing";
  c.label = to_string(k);
  c.curvature = (long long)k;
  return c;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

Scene render_depth_circles(int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("render_depth_circles: max_depth must be >= 0");
  Scene scene;
  for (const auto& c : depth_circles_by_length(max_depth)) {
    if (c.is_half_plane()) {
      const bool below = c.coeffs.t < 0;  // Id_1: y <= 0; Id_2: y >= 1
      scene.lines.push_back({below ? 0.0 : 1.0, below, "depth", c.label()});
    } else {
      scene.circles.push_back(depth_circle_shape(c));
    }
  }
  fit_viewport(scene, 0.05);
  return scene;
}

Scene render_packing(const DescartesQuadruple& q, long long max_curvature) {
  const RootReduction red = reduce_to_root(q);
  if (minimal_curvature(red) <= 0)
    throw std::invalid_argument("render_packing: " + to_string(q) + " does not generate a bounded packing");
  const Config root = place_root(red.root);
  Scene scene;
  for (int i = 0; i < 4; ++i) {
    if (root.k[i] <= max_curvature || root.k[i] < 0) scene.circles.push_back(packing_circle(root.k[i], root.z[i]));
  }
  std::function<void(const Config&, int)> expand = [&](const Config& cfg, int last) {
    for (int i = 0; i < 4; ++i) {
      if (i == last) continue;
      i128 ksum = 0;
      Complex zsum = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        ksum = checked_add(ksum, cfg.k[j]);
        zsum += cfg.z[j];
      }
      Config next = cfg;
      next.k[i] = checked_sub(checked_mul(2, ksum), cfg.k[i]);
      next.z[i] = 2.0L * zsum - cfg.z[i];
      if (next.k[i] > max_curvature || next.k[i] < cfg.k[i]) continue;
      scene.circles.push_back(packing_circle(next.k[i], next.z[i]));
      expand(next, i);
    }
  };
  expand(root, -1);
  fit_viewport(scene, 0.02);
  return scene;
}

Scene render_epsilon_circles(const CoefficientQuadruple& c, const std::vector<double>& eps_list) {
  if (c.w <= 0) throw std::invalid_argument("render_epsilon_circles: D_W must be a bounded circle");
  Scene scene;
  DepthCircle dw{c, {}, 0};
  SceneCircle outline = depth_circle_shape(dw);
  outline.label = to_string(c);
  scene.circles.push_back(outline);
  scene.points.push_back({outline.x, outline.y, "depth-center"});
  for (double eps : eps_list) {
    const FloatCircle e = epsilon_circle(c, eps);
    SceneCircle s;
    s.x = e.x;
    s.y = e.y;
    s.r = e.r;
    s.kind = "epsilon";
    char buf[64];
    std::snprintf(buf, sizeof buf, "eps=%.6g", eps);
    s.label = buf;
    scene.circles.push_back(s);
    scene.points.push_back({e.x, e.y, "epsilon-center"});
  }
  fit_viewport(scene, 0.1);
  return scene;
}

void add_fundamental_domain(Scene& scene) {
  const double top = std::max(scene.viewport.y_max, 1.5);
  const double y0 = std::sqrt(3.0) / 2.0;
  scene.segments.push_back({-0.5, y0, -0.5, top, "domain"});
  scene.segments.push_back({0.0, 1.0, 0.0, top, "domain"});
  SceneCircle unit;
  unit.r = 1.0;
  unit.kind = "domain";
  unit.exact_x = "0";
  unit.exact_y = "0";
  unit.exact_r = "1";
  scene.circles.push_back(unit);
}

void write_svg(std::ostream& os, const Scene& scene, const SvgOptions& opts) {
  const Viewport& v = scene.viewport;
  const double scale = opts.width_px / (v.x_max - v.x_min);
  const double height_px = (v.y_max - v.y_min) * scale;
  auto px = [&](double x) { return fmt((x - v.x_min) * scale); };
  auto py = [&](double y) { return fmt((v.y_max - y) * scale); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width_px << "\" height=\""
     << fmt(height_px) << "\" viewBox=\"0 0 " << opts.width_px << ' ' << fmt(height_px) << "\">\n";
  os << "<style>\n"
        "  .depth, .packing, .outer { fill: none; stroke: #1f3b73; stroke-width: 1; }\n"
        "  .outer { stroke: #000; stroke-width: 1.5; }\n"
        "  .epsilon { fill: none; stroke: #c0392b; stroke-width: 1; }\n"
        "  .domain { fill: none; stroke: #888; stroke-dasharray: 4 3; }\n"
        "  .depth-center { fill: #000; }\n"
        "  .epsilon-center { fill: #c0392b; }\n"
        "  text { font-family: sans-serif; text-anchor: middle; dominant-baseline: central; }\n"
        "</style>\n";
  for (const auto& l : scene.lines) {
    os << "<line class=\"" << l.kind << "\" x1=\"" << px(v.x_min) << "\" y1=\"" << py(l.y) << "\" x2=\""
       << px(v.x_max) << "\" y2=\"" << py(l.y) << "\"/>\n";
    if (!l.label.empty()) {
      const double ly = l.below ? l.y - 0.04 * (v.y_max - v.y_min) : l.y + 0.04 * (v.y_max - v.y_min);
      os << "<text x=\"" << px((v.x_min + v.x_max) / 2) << "\" y=\"" << py(ly) << "\" font-size=\"12\">"
         << escape(l.label) << "</text>\n";
    }
  }
  for (const auto& s : scene.segments) {
    os << "<line class=\"" << s.kind << "\" x1=\"" << px(s.x1) << "\" y1=\"" << py(s.y1) << "\" x2=\"" << px(s.x2)
       << "\" y2=\"" << py(s.y2) << "\"/>\n";
  }
  for (const auto& c : scene.circles) {
    const double r_px = c.r * scale;
    os << "<circle class=\"" << c.kind << "\" cx=\"" << px(c.x) << "\" cy=\"" << py(c.y) << "\" r=\"" << fmt(r_px)
       << "\"/>\n";
    if (!c.label.empty() && r_px >= opts.label_min_radius_px && c.kind != "outer") {
      const double font = std::min(14.0, std::max(6.0, r_px / 2.5));
      os << "<text x=\"" << px(c.x) << "\" y=\"" << py(c.y) << "\" font-size=\"" << fmt(font) << "\">"
         << escape(c.label) << "</text>\n";
    }
  }
  for (const auto& p : scene.points) {
    os << "<circle class=\"" << p.kind << "\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"2\"/>\n";
  }
  os << "</svg>\n";
}

void write_circle_csv(std::ostream& os, const Scene& scene) {
  os << "kind,x,y,r,label\n";
  for (const auto& l : scene.lines) {
    os << (l.below ? "halfplane_below" : "halfplane_above") << ",," << fmt(l.y) << ",," << l.label << '\n';
  }
  for (const auto& c : scene.circles) {
    if (!c.exact_x.empty()) {
      os << c.kind << ',' << c.exact_x << ',' << c.exact_y << ',' << c.exact_r << ',' << c.label << '\n';
    } else {
      os << c.kind << ',' << fmt(c.x) << ',' << fmt(c.y) << ',' << fmt(c.r) << ',' << c.label << '\n';
    }
  }
}

}  // namespace apollo
