#pragma once

// Compact-set representations: finite point clouds over R^n or C^n and real
// H-polytopes, together with symmetrization, polarity of bodies, non-flatness
// tests and the exact smallest-enclosing-disk oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "extremal/ellipsoid.hpp"
#include "extremal/linalg.hpp"
#include "extremal/random.hpp"

namespace extremal {

template <class K>
struct PointCloud {
  std::vector<Vec<K>> points;

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

  void validate() const {
    if (points.empty()) throw std::invalid_argument("point cloud: empty");
    for (const auto& p : points)
      if (p.size() != dim()) throw std::invalid_argument("point cloud: ragged dimensions");
  }
};

// True when the affine hull of the cloud has full dimension over its field:
// the centered Gram matrix must have numerical rank n.
template <class K>
bool is_nonflat(const PointCloud<K>& cloud, double tol = 1e-8) {
  cloud.validate();
  const std::size_t n = cloud.dim();
  Vec<K> centroid(n, K{});
  for (const auto& p : cloud.points) centroid = centroid + p;
  centroid = K(1.0 / static_cast<double>(cloud.size())) * centroid;

  Mat<K> gram(n, n);
  for (const auto& p : cloud.points) {
    const Vec<K> d = p - centroid;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        gram(i, j) += d[i] * field_traits<K>::conj(d[j]);
  }
  const EigenH<K> e = eigh(hermitian_part(gram));
  const double top = std::sqrt(std::max(0.0, e.values.front()));
  const double bottom = std::sqrt(std::max(0.0, e.values.back()));
  return top > 0.0 && bottom > tol * top;
}

// Symmetrization around the origin: all products of the cloud with m equally
// spaced modulus-one scalars. Over the reals the only choices are +-1.
template <class K>
PointCloud<K> symmetrize(const PointCloud<K>& cloud, std::size_t m = 64) {
  cloud.validate();
  if (m < 2) throw std::invalid_argument("symmetrize: m must be at least 2");
  std::vector<K> units;
  if constexpr (field_traits<K>::is_complex) {
    for (std::size_t k = 0; k < m; ++k) {
      const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
      units.push_back({std::cos(t), std::sin(t)});
    }
  } else {
    units = {1.0, -1.0};
  }
  PointCloud<K> out;
  for (const K& zeta : units)
    for (const auto& p : cloud.points) {
      Vec<K> q = zeta * p;
      bool dup = false;
      for (const auto& existing : out.points)
        if (norm(existing - q) <= 1e-12 * (1.0 + norm(q))) {
          dup = true;
          break;
        }
      if (!dup) out.points.push_back(std::move(q));
    }
  return out;
}

// ----------------------------------------------------------------- polytopes

struct Halfspace {
  Vec<double> normal;
  double offset = 0.0;  // normal . x <= offset
};

struct HPolytope {
  std::vector<Halfspace> rows;

  std::size_t dim() const { return rows.empty() ? 0 : rows.front().normal.size(); }
  std::size_t size() const { return rows.size(); }

  void validate() const {
    if (rows.empty()) throw std::invalid_argument("polytope: no constraints");
    for (const auto& h : rows)
      if (h.normal.size() != dim()) throw std::invalid_argument("polytope: ragged constraints");
  }
};

// Copy with unit normals. Constraints with vanishing normals are dropped when
// vacuous and rejected when infeasible.
inline HPolytope normalized(const HPolytope& poly) {
  poly.validate();
  HPolytope out;
  for (const auto& h : poly.rows) {
    const double len = norm(h.normal);
    if (len <= 1e-14) {
      if (h.offset < 0.0) throw std::domain_error("polytope: infeasible constraint 0 <= b < 0");
      continue;
    }
    out.rows.push_back({(1.0 / len) * h.normal, h.offset / len});
  }
  if (out.rows.empty()) throw std::domain_error("polytope: no effective constraints");
  return out;
}

inline double min_slack(const HPolytope& poly, const Vec<double>& x) {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& h : poly.rows) s = std::min(s, h.offset - dot_h(h.normal, x));
  return s;
}

namespace detail {

// Subgradient ascent on the min-slack function; succeeds as soon as a
// strictly interior point is found.
inline std::optional<Vec<double>> feasible_point(const HPolytope& poly) {
  const std::size_t n = poly.dim();
  Vec<double> x(n, 0.0);
  if (min_slack(poly, x) > 1e-12) return x;
  double scale = 1.0;
  for (const auto& h : poly.rows) scale = std::max(scale, std::abs(h.offset));
  double best = min_slack(poly, x);
  Vec<double> best_x = x;
  for (std::size_t k = 1; k <= 20000; ++k) {
    std::size_t j = 0;
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const double si = poly.rows[i].offset - dot_h(poly.rows[i].normal, x);
      if (si < s) { s = si; j = i; }
    }
    if (s > best) { best = s; best_x = x; }
    if (best > 1e-9 * scale && k > 32) return best_x;
    const double step = 2.0 * scale / std::sqrt(static_cast<double>(k));
    x = x - step * poly.rows[j].normal;
  }
  if (best > 1e-12 * scale) return best_x;
  return std::nullopt;
}

}  // namespace detail

// Analytic center of a bounded polytope with nonempty interior, by damped
// Newton on the log-barrier potential. Also serves as the interior-point and
// unboundedness probe: divergence or a rank-deficient Hessian reject the input.
inline Vec<double> analytic_center(const HPolytope& poly_in) {
  const HPolytope poly = normalized(poly_in);
  const std::size_t n = poly.dim();
  auto x0 = detail::feasible_point(poly);
  if (!x0) throw std::domain_error("polytope: could not find an interior point");
  Vec<double> x = *x0;

  double scale = 1.0;
  for (const auto& h : poly.rows) scale = std::max(scale, std::abs(h.offset));

  for (int iter = 0; iter < 200; ++iter) {
    Vec<double> grad(n, 0.0);
    Mat<double> hess(n, n);
    for (const auto& h : poly.rows) {
      const double s = h.offset - dot_h(h.normal, x);
      const double inv = 1.0 / s;
      for (std::size_t i = 0; i < n; ++i) {
        grad[i] += h.normal[i] * inv;
        for (std::size_t j = 0; j < n; ++j)
          hess(i, j) += h.normal[i] * h.normal[j] * inv * inv;
      }
    }
    Mat<double> l;
    if (!try_cholesky(hess, l, 1e-13))
      throw std::domain_error("polytope: unbounded (barrier Hessian is rank deficient)");
    Vec<double> step = solve_upper_adjoint(l, solve_lower(l, grad));
    const double decrement = dot_h(grad, step);
    if (decrement <= 1e-24) break;
    double eta = 1.0;
    while (eta > 1e-14 && min_slack(poly, x - eta * step) <= 0.0) eta *= 0.5;
    x = x - eta * step;
    if (norm(x) > 1e9 * scale)
      throw std::domain_error("polytope: unbounded (analytic center diverges)");
  }
  return x;
}

// Cheap certified rejection of unbounded polytopes: probes coordinate and
// random directions for a feasible recession ray; exact angular-gap test in
// the plane.
inline bool is_bounded_probe(const HPolytope& poly_in, std::uint64_t seed = 12345) {
  const HPolytope poly = normalized(poly_in);
  const std::size_t n = poly.dim();
  if (n == 2) {
    std::vector<double> angles;
    for (const auto& h : poly.rows) angles.push_back(std::atan2(h.normal[1], h.normal[0]));
    std::sort(angles.begin(), angles.end());
    double gap = 2.0 * M_PI + angles.front() - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
      gap = std::max(gap, angles[i] - angles[i - 1]);
    return gap < M_PI - 1e-12;
  }
  Rng rng(seed);
  std::vector<Vec<double>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    dirs.push_back(unit_vector<double>(n, i));
    dirs.push_back(-1.0 * unit_vector<double>(n, i));
  }
  for (std::size_t k = 0; k < 2 * n; ++k) dirs.push_back(rng.unit_vector<double>(n));
  for (const auto& d : dirs) {
    bool escapes = true;
    for (const auto& h : poly.rows)
      if (dot_h(h.normal, d) > 1e-12) { escapes = false; break; }
    if (escapes) return false;
  }
  return true;
}

// ------------------------------------------------------------- 2-D geometry

namespace plane {

using Point2 = std::array<double, 2>;

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns the hull counter-clockwise, no repeat of
// the first vertex, collinear points dropped.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t ii = n - 1; ii-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[ii]) <= 0.0) --k;
    hull[k++] = pts[ii];
  }
  hull.resize(k - 1);
  return hull;
}

// H-representation of a counter-clockwise polygon: one unit outward normal
// per edge.
inline HPolytope hull_to_hrep(const std::vector<Point2>& hull) {
  if (hull.size() < 3) throw std::domain_error("hull_to_hrep: polygon is flat");
  HPolytope poly;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& v = hull[i];
    const Point2& w = hull[(i + 1) % hull.size()];
    Vec<double> nrm = {w[1] - v[1], v[0] - w[0]};
    const double len = norm(nrm);
    if (len <= 1e-14) continue;
    nrm = (1.0 / len) * nrm;
    poly.rows.push_back({nrm, nrm[0] * v[0] + nrm[1] * v[1]});
  }
  poly.validate();
  return poly;
}

// All vertices of a planar H-polytope by pairwise constraint intersection,
// ordered counter-clockwise.
inline std::vector<Point2> vertex_enum(const HPolytope& poly_in) {
  const HPolytope poly = normalized(poly_in);
  if (poly.dim() != 2) throw std::invalid_argument("vertex_enum: planar polytopes only");
  double scale = 1.0;
  for (const auto& h : poly.rows) scale = std::max(scale, std::abs(h.offset));
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j) {
      const auto& a = poly.rows[i];
      const auto& b = poly.rows[j];
      const double d = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (std::abs(d) < 1e-12) continue;
      const Point2 x = {(a.offset * b.normal[1] - b.offset * a.normal[1]) / d,
                        (a.normal[0] * b.offset - b.normal[0] * a.offset) / d};
      bool feasible = true;
      for (const auto& h : poly.rows)
        if (h.normal[0] * x[0] + h.normal[1] * x[1] > h.offset + 1e-9 * scale) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      bool dup = false;
      for (const auto& v : vertices)
        if (std::hypot(v[0] - x[0], v[1] - x[1]) <= 1e-9 * scale) { dup = true; break; }
      if (!dup) vertices.push_back(x);
    }
  if (vertices.size() >= 3) vertices = convex_hull(vertices);
  return vertices;
}

inline bool origin_strictly_inside(const std::vector<Point2>& pts) {
  const auto hull = convex_hull(pts);
  if (hull.size() < 3) return false;
  const HPolytope h = hull_to_hrep(hull);
  double scale = 1.0;
  for (const auto& row : h.rows) scale = std::max(scale, std::abs(row.offset));
  for (const auto& row : h.rows)
    if (row.offset <= 1e-12 * scale) return false;
  return true;
}

}  // namespace plane

// Planar view of a cloud: native for real dimension two, (re, im) for C^1.
template <class K>
std::vector<plane::Point2> as_planar(const PointCloud<K>& cloud) {
  cloud.validate();
  std::vector<plane::Point2> out;
  if constexpr (field_traits<K>::is_complex) {
    if (cloud.dim() != 1) throw std::invalid_argument("as_planar: complex cloud must be C^1");
    for (const auto& p : cloud.points) out.push_back({p[0].real(), p[0].imag()});
  } else {
    if (cloud.dim() != 2) throw std::invalid_argument("as_planar: real cloud must be planar");
    for (const auto& p : cloud.points) out.push_back({p[0], p[1]});
  }
  return out;
}

// ----------------------------------------------------------- polar of a body

// {x : p . x <= 1 for every p in the cloud} = (conv P)*. Requires the origin
// strictly inside the convex hull.
template <class K>
HPolytope polar_polytope(const PointCloud<K>& cloud) {
  static_assert(!field_traits<K>::is_complex, "there is no polarity over C^n");
  cloud.validate();
  const std::size_t n = cloud.dim();
  if (n == 2) {
    if (!plane::origin_strictly_inside(as_planar(cloud)))
      throw std::domain_error("polar_polytope: origin not interior to the hull");
  } else {
    // sampled support-function minimum over the sphere with local refinement
    Rng rng(1u);
    double lowest = std::numeric_limits<double>::infinity();
    std::vector<Vec<double>> starts;
    for (std::size_t i = 0; i < n; ++i) {
      starts.push_back(unit_vector<double>(n, i));
      starts.push_back(-1.0 * unit_vector<double>(n, i));
    }
    for (std::size_t k = 0; k < 8 * n; ++k) starts.push_back(rng.unit_vector<double>(n));
    double scale = 1e-300;
    for (const auto& p : cloud.points) scale = std::max(scale, norm(p));
    for (Vec<double> d : starts) {
      for (std::size_t it = 1; it <= 200; ++it) {
        double h = -std::numeric_limits<double>::infinity();
        std::size_t j = 0;
        for (std::size_t i = 0; i < cloud.size(); ++i) {
          const double v = dot_h(cloud.points[i], d);
          if (v > h) { h = v; j = i; }
        }
        lowest = std::min(lowest, h);
        Vec<double> g = cloud.points[j] - h * d;  // tangential part
        const double gn = norm(g);
        if (gn < 1e-14) break;
        d = d - (0.5 / static_cast<double>(it)) * g;
        d = (1.0 / norm(d)) * d;
      }
    }
    if (lowest <= 1e-9 * scale)
      throw std::domain_error("polar_polytope: origin not interior to the hull");
  }
  HPolytope out;
  for (const auto& p : cloud.points) out.rows.push_back({p, 1.0});
  return out;
}

// ------------------------------------------------- smallest enclosing disk

struct Disk {
  plane::Point2 center{0.0, 0.0};
  double radius = 0.0;

  bool degenerate(double tol = 1e-12) const { return radius <= tol; }
};

namespace detail {

inline bool in_disk(const plane::Point2& p, const Disk& d, double eps) {
  return std::hypot(p[0] - d.center[0], p[1] - d.center[1]) <= d.radius + eps;
}

inline Disk disk_two(const plane::Point2& a, const plane::Point2& b) {
  return {{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])},
          0.5 * std::hypot(a[0] - b[0], a[1] - b[1])};
}

inline Disk disk_three(const plane::Point2& a, const plane::Point2& b, const plane::Point2& c) {
  const double bx = b[0] - a[0], by = b[1] - a[1];
  const double cx = c[0] - a[0], cy = c[1] - a[1];
  const double d = 2.0 * (bx * cy - by * cx);
  if (std::abs(d) < 1e-30) {  // collinear: fall back to the widest pair
    Disk best = disk_two(a, b);
    for (const Disk& cand : {disk_two(a, c), disk_two(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const plane::Point2 center = {a[0] + (cy * b2 - by * c2) / d, a[1] + (bx * c2 - cx * b2) / d};
  return {center, std::hypot(center[0] - a[0], center[1] - a[1])};
}

inline Disk disk_of_support(const std::vector<plane::Point2>& support) {
  switch (support.size()) {
    case 0: return {};
    case 1: return {support[0], 0.0};
    case 2: return disk_two(support[0], support[1]);
    default: return disk_three(support[0], support[1], support[2]);
  }
}

inline Disk welzl(std::vector<plane::Point2>& pts, std::size_t limit,
                  std::vector<plane::Point2>& support) {
  if (limit == 0 || support.size() == 3) return disk_of_support(support);
  const plane::Point2 p = pts[limit - 1];
  Disk d = welzl(pts, limit - 1, support);
  const double eps = 1e-12 * (1.0 + d.radius);
  if (in_disk(p, d, eps)) return d;
  support.push_back(p);
  d = welzl(pts, limit - 1, support);
  support.pop_back();
  return d;
}

}  // namespace detail

// Smallest enclosing disk of a planar point set, Welzl's randomized
// incremental algorithm. The seed fixes the shuffle, so results are
// reproducible; a final pass guarantees exact containment.
inline Disk min_enclosing_disk_planar(std::vector<plane::Point2> pts, std::uint64_t seed = 1) {
  if (pts.empty()) throw std::invalid_argument("min_enclosing_disk: empty cloud");
  std::mt19937_64 gen(splitmix64(seed));
  std::shuffle(pts.begin(), pts.end(), gen);
  std::vector<plane::Point2> support;
  Disk d = detail::welzl(pts, pts.size(), support);
  for (const auto& p : pts)
    d.radius = std::max(d.radius, std::hypot(p[0] - d.center[0], p[1] - d.center[1]));
  return d;
}

template <class K>
Disk min_enclosing_disk(const PointCloud<K>& cloud, std::uint64_t seed = 1) {
  return min_enclosing_disk_planar(as_planar(cloud), seed);
}

}  // namespace extremal
