#pragma once

// Deterministic SVG rendering of planar instances and ellipse outlines.
// Fixed 800x800 viewport, fixed decimal formatting: identical input gives
// byte-identical output.

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/bodies.hpp"
#include "extremal/ellipsoid.hpp"

namespace extremal {

namespace svg_detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Mapper {
  double x0 = 0.0, y0 = 0.0, scale = 1.0;
  static constexpr double size = 800.0;
  static constexpr double margin = 48.0;

  void fit(double lo_x, double lo_y, double hi_x, double hi_y) {
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double cx = 0.5 * (lo_x + hi_x);
    const double cy = 0.5 * (lo_y + hi_y);
    scale = (size - 2.0 * margin) / (1.08 * span);
    x0 = cx;
    y0 = cy;
  }
  double sx(double x) const { return size / 2.0 + scale * (x - x0); }
  double sy(double y) const { return size / 2.0 - scale * (y - y0); }
};

}  // namespace svg_detail

// Shadow of a real ellipsoid on a coordinate pair: the (i, j) block of the
// inverse shape, inverted back.
inline Ellipsoid<double> project_ellipsoid(const Ellipsoid<double>& e, std::size_t i,
                                           std::size_t j) {
  if (i >= e.dim() || j >= e.dim() || i == j)
    throw std::invalid_argument("project_ellipsoid: bad coordinate pair");
  if (e.dim() == 2 && i == 0 && j == 1) return e;
  const Mat<double> sigma = inverse_hpd(e.shape);
  Mat<double> block(2, 2);
  block(0, 0) = sigma(i, i);
  block(0, 1) = sigma(i, j);
  block(1, 0) = sigma(j, i);
  block(1, 1) = sigma(j, j);
  return Ellipsoid<double>({e.center[i], e.center[j]}, inverse_hpd(block));
}

struct PlotInput {
  std::vector<plane::Point2> points;              // dots
  std::vector<plane::Point2> polygon;             // closed outline, ccw
  std::vector<Ellipsoid<double>> ellipses;        // planar ellipses
};

inline std::string render_plot(const PlotInput& in) {
  using svg_detail::fmt;

  // sampled outlines drive both the bounding box and the drawing
  std::vector<std::vector<plane::Point2>> outlines;
  for (const auto& e : in.ellipses) {
    const auto axis = to_axis_form(e);
    std::vector<plane::Point2> path;
    for (int s = 0; s <= 160; ++s) {
      const double t = 2.0 * M_PI * static_cast<double>(s) / 160.0;
      const Vec<double> p = ellipsoid_point(axis, {std::cos(t), std::sin(t)});
      path.push_back({p[0], p[1]});
    }
    outlines.push_back(std::move(path));
  }

  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  const auto grow = [&](const plane::Point2& p) {
    lo_x = std::min(lo_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_x = std::max(hi_x, p[0]);
    hi_y = std::max(hi_y, p[1]);
  };
  for (const auto& p : in.points) grow(p);
  for (const auto& p : in.polygon) grow(p);
  for (const auto& path : outlines)
    for (const auto& p : path) grow(p);
  if (lo_x > hi_x) { lo_x = -1.0; lo_y = -1.0; hi_x = 1.0; hi_y = 1.0; }

  svg_detail::Mapper map;
  map.fit(lo_x, lo_y, hi_x, hi_y);

  static const char* palette[] = {"#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  if (!in.polygon.empty()) {
    out << "<polygon fill=\"#f2f2f2\" stroke=\"#555555\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < in.polygon.size(); ++i) {
      if (i) out << ' ';
      out << fmt(map.sx(in.polygon[i][0])) << ',' << fmt(map.sy(in.polygon[i][1]));
    }
    out << "\"/>\n";
  }

  for (std::size_t k = 0; k < outlines.size(); ++k) {
    out << "<path fill=\"none\" stroke=\"" << palette[k % 5]
        << "\" stroke-width=\"2\" d=\"";
    for (std::size_t i = 0; i < outlines[k].size(); ++i) {
      out << (i == 0 ? "M" : " L") << fmt(map.sx(outlines[k][i][0])) << ' '
          << fmt(map.sy(outlines[k][i][1]));
    }
    out << " Z\"/>\n";
  }

  for (const auto& p : in.points)
    out << "<circle cx=\"" << fmt(map.sx(p[0])) << "\" cy=\"" << fmt(map.sy(p[1]))
        << "\" r=\"4\" fill=\"#1f77b4\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace extremal
