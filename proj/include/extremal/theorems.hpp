#pragma once

// Executable verification of the uniqueness machinery: the two auxiliary
// lemmas, the averaged-ellipsoid containment constructions behind both
// uniqueness proofs, circle-averaging symmetry, polarity duality of the
// centered extremal ellipsoids, and the chord-midpoint characterization of
// ellipsoids together with its skew-reflection witness.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extremal/bodies.hpp"
#include "extremal/ellipsoid.hpp"
#include "extremal/linalg.hpp"
#include "extremal/random.hpp"
#include "extremal/solvers.hpp"

namespace extremal {

struct VerificationReport {
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string note;
};

inline VerificationReport make_report(std::string name, std::size_t trials, double max_residual,
                                      double threshold, std::uint64_t seed,
                                      std::string note = {}) {
  VerificationReport r;
  r.name = std::move(name);
  r.trials = trials;
  r.max_residual = max_residual;
  r.threshold = threshold;
  r.pass = max_residual <= threshold;
  r.seed = seed;
  r.note = std::move(note);
  return r;
}

// ------------------------------------------------------------ two lemmas

// Margin det((lambda + 1)/2) - 1 after rescaling lambda to unit product.
// Strictly positive unless lambda is the all-ones vector.
inline double volume_lemma_margin(std::vector<double> lambda) {
  if (lambda.empty()) throw std::invalid_argument("volume lemma: empty vector");
  double logdet = 0.0;
  for (double l : lambda) {
    if (!(l > 0.0)) throw std::domain_error("volume lemma: nonpositive entry");
    logdet += std::log(l);
  }
  const double scale = std::exp(-logdet / static_cast<double>(lambda.size()));
  double prod = 1.0;
  for (double l : lambda) prod *= 0.5 * (scale * l + 1.0);
  return prod - 1.0;
}

// |LHS - RHS| of  lambda |x|^2 + |x-c|^2
//               = (lambda+1) |x - c/(lambda+1)|^2 + lambda/(lambda+1) |c|^2.
inline double square_completion_residual(double lambda, complex_t c, complex_t x) {
  if (!(lambda > 0.0)) throw std::domain_error("square completion: lambda must be positive");
  const double lhs = lambda * std::norm(x) + std::norm(x - c);
  const double rhs = (lambda + 1.0) * std::norm(x - c / (lambda + 1.0)) +
                     lambda / (lambda + 1.0) * std::norm(c);
  return std::abs(lhs - rhs);
}

namespace detail {

inline void require_unit_product(const std::vector<double>& lambda, const char* what) {
  double logdet = 0.0;
  for (double l : lambda) {
    if (!(l > 0.0)) throw std::domain_error(std::string(what) + ": nonpositive axis");
    logdet += std::log(l);
  }
  if (std::abs(logdet) > 1e-9)
    throw std::domain_error(std::string(what) + ": axis vector must have unit product");
}

template <class K>
Vec<K> sample_ball(Rng& rng, std::size_t n, bool boundary) {
  Vec<K> u = rng.ball_point<K>(n);
  if (boundary) {
    const double nn = norm(u);
    if (nn > 1e-9) u = K(1.0 / nn) * u;
  }
  return u;
}

}  // namespace detail

// -------------------------------------------- averaged-ellipsoid witnesses

// Replays the inscribed-side construction: for x in the averaged ellipsoid
// El((lambda+1)/2) + c/2, the witnesses u (in the unit ball) and
// y = lambda (.) u + c (in El(lambda) + c) have x as their midpoint.
template <class K>
VerificationReport e3_containment_witness(const std::vector<double>& lambda, const Vec<K>& c,
                                          std::size_t samples, std::uint64_t seed) {
  detail::require_unit_product(lambda, "e3 witness");
  const std::size_t n = lambda.size();
  if (c.size() != n) throw std::invalid_argument("e3 witness: dimension mismatch");

  const Ellipsoid<K> e1 = Ellipsoid<K>::unit_ball(n);
  const Ellipsoid<K> e2 = axis_ellipsoid<K>(lambda, c);
  std::vector<double> avg(n);
  for (std::size_t i = 0; i < n; ++i) avg[i] = 0.5 * (lambda[i] + 1.0);
  const Ellipsoid<K> e3 = axis_ellipsoid<K>(avg, K(0.5) * c);

  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec<K> u = detail::sample_ball<K>(rng, n, s % 4 == 0);
    Vec<K> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = K(avg[i]) * u[i] + K(0.5) * c[i];
      y[i] = K(lambda[i]) * u[i] + c[i];
    }
    const Vec<K> mid = K(0.5) * (y + u);
    double r = norm(x - mid);
    r = std::max(r, std::max(0.0, quadratic_form(e1.shape, u) - 1.0));
    r = std::max(r, std::max(0.0, quadratic_form(e2.shape, y - e2.center) - 1.0));
    r = std::max(r, std::max(0.0, quadratic_form(e3.shape, x - e3.center) - 1.0));
    worst = std::max(worst, r);
  }
  return make_report("e3-witness", samples, worst, 1e-10, seed);
}

// Real branch: two unit balls at +-alpha e_1; every x in El(alpha e_1 + 1) is
// the convex combination t y + (1-t) z with t = (u_1 + 1)/2 in [0, 1].
inline VerificationReport e3_real_witness(double alpha, std::size_t n, std::size_t samples,
                                          std::uint64_t seed) {
  if (alpha < 0.0) throw std::domain_error("e3 real witness: alpha must be nonnegative");
  if (n == 0) throw std::invalid_argument("e3 real witness: dimension must be positive");
  std::vector<double> outer(n, 1.0);
  outer[0] = alpha + 1.0;
  const Ellipsoid<double> e3 = axis_ellipsoid<double>(outer, Vec<double>(n, 0.0));

  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec<double> u = detail::sample_ball<double>(rng, n, s % 4 == 0);
    Vec<double> x = u;
    x[0] = (alpha + 1.0) * u[0];
    Vec<double> y = u, z = u;
    y[0] += alpha;
    z[0] -= alpha;
    const double t = 0.5 * (u[0] + 1.0);
    Vec<double> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = t * y[i] + (1.0 - t) * z[i];
    double r = norm(x - comb);
    r = std::max(r, std::max(0.0, -t));
    r = std::max(r, std::max(0.0, t - 1.0));
    Vec<double> yc = y; yc[0] -= alpha;
    Vec<double> zc = z; zc[0] += alpha;
    r = std::max(r, std::max(0.0, norm(yc) - 1.0));
    r = std::max(r, std::max(0.0, norm(zc) - 1.0));
    r = std::max(r, std::max(0.0, quadratic_form(e3.shape, x) - 1.0));
    worst = std::max(worst, r);
  }
  return make_report("e3-real-witness", samples, worst, 1e-10, seed);
}

// Circumscribed-side construction: E1 = El(beta) with beta = lambda^{-1/2},
// E2 = unit ball + c. Checks the chain E1 cap E2 into the averaged quadratic
// set E3 into the recentered ellipsoid E4, the square-completion identity
// along the way, and the volume drop det((lambda+1)/2)^{-1/2} < 1 off the
// all-ones axis vector.
template <class K>
VerificationReport e4_containment(const std::vector<double>& lambda, const Vec<K>& c,
                                  std::size_t samples, std::uint64_t seed) {
  detail::require_unit_product(lambda, "e4 containment");
  const std::size_t n = lambda.size();
  if (c.size() != n) throw std::invalid_argument("e4 containment: dimension mismatch");

  std::vector<double> beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = 1.0 / std::sqrt(lambda[i]);
  const Ellipsoid<K> e1 = axis_ellipsoid<K>(beta, Vec<K>(n, K{}));
  const Ellipsoid<K> e2 = Ellipsoid<K>(c, Mat<K>::identity(n));

  Vec<K> z(n);
  double drop = 0.0;  // sum lambda_i/(lambda_i+1) |c_i|^2
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = c[i] * K(1.0 / (lambda[i] + 1.0));
    drop += lambda[i] / (lambda[i] + 1.0) * std::norm(std::complex<double>(c[i]));
  }

  const auto quad3 = [&](const Vec<K>& x) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      v += lambda[i] * std::norm(std::complex<double>(x[i])) +
           std::norm(std::complex<double>(x[i] - c[i]));
    return v;
  };
  const auto quad4 = [&](const Vec<K>& x) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      v += (lambda[i] + 1.0) * std::norm(std::complex<double>(x[i] - z[i]));
    return v;
  };

  Rng rng(seed);
  double worst = 0.0;
  std::size_t accepted = 0;
  const auto axis1 = to_axis_form(e1);
  for (std::size_t attempt = 0; attempt < 40 * samples && accepted < samples; ++attempt) {
    const Vec<K> x = ellipsoid_point(axis1, detail::sample_ball<K>(rng, n, false));
    if (!contains(e2, x, 0.0)) continue;
    ++accepted;
    const double v3 = quad3(x);
    worst = std::max(worst, std::max(0.0, v3 - 2.0));                       // x in E3
    worst = std::max(worst, std::max(0.0, quad4(x) - 2.0));                 // x in E4
    worst = std::max(worst, std::abs(quad4(x) + drop - v3));                // identity
  }

  // sample E3 itself: the identity pins it as a recentered axis ellipsoid
  const double rho = 2.0 - drop;
  std::size_t e3_samples = 0;
  if (rho > 1e-12) {
    std::vector<double> e3_axes(n);
    for (std::size_t i = 0; i < n; ++i) e3_axes[i] = std::sqrt(rho / (lambda[i] + 1.0));
    const auto axis3 = to_axis_form(axis_ellipsoid<K>(e3_axes, z));
    for (std::size_t s = 0; s < samples; ++s) {
      const Vec<K> x = ellipsoid_point(axis3, detail::sample_ball<K>(rng, n, s % 4 == 0));
      ++e3_samples;
      worst = std::max(worst, std::max(0.0, quad3(x) - 2.0 - 1e-12));
      worst = std::max(worst, std::max(0.0, quad4(x) - 2.0 - 1e-12));
      worst = std::max(worst, std::abs(quad4(x) + drop - quad3(x)));
    }
  }

  double delta = 1.0;
  for (std::size_t i = 0; i < n; ++i) delta *= 0.5 * (lambda[i] + 1.0);
  const double vol4 = 1.0 / std::sqrt(delta);
  double lambda_dist = 0.0;
  for (double l : lambda) lambda_dist = std::max(lambda_dist, std::abs(l - 1.0));
  if (lambda_dist > 1e-9)
    worst = std::max(worst, vol4 < 1.0 ? 0.0 : vol4 - 1.0);
  else
    worst = std::max(worst, std::abs(vol4 - 1.0));

  return make_report("e4-containment", accepted + e3_samples, worst, 1e-10, seed,
                     "vol(E4)/vol(E2) = " + std::to_string(vol4));
}

// ------------------------------------------------------ symmetry (circle average)

// Average of the form over m equally spaced rotations cos t I + sin t J.
inline Mat<double> circle_average(const Mat<double>& a, std::size_t m) {
  if (!a.square() || a.rows() % 2 != 0)
    throw std::invalid_argument("circle_average: dimension must be even");
  if (m < 3) throw std::invalid_argument("circle_average: need at least 3 rotations");
  const std::size_t d = a.rows();
  const Mat<double> j = complex_structure(d);
  Mat<double> avg(d, d);
  for (std::size_t k = 0; k < m; ++k) {
    const double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    const Mat<double> rot = std::cos(th) * Mat<double>::identity(d) + std::sin(th) * j;
    avg = avg + transpose(rot) * a * rot;
  }
  return hermitian_part((1.0 / static_cast<double>(m)) * avg);
}

// Symmetrizing any real form over the circle group lands in the J-commuting
// cone: the averaged ellipsoid is complex.
inline VerificationReport check_bm_symmetric_implies_complex(const Mat<double>& a, std::size_t m,
                                                             std::uint64_t seed = 0) {
  const Mat<double> avg = circle_average(a, m);
  const Mat<double> j = complex_structure(a.rows());
  const double resid = max_abs(avg * j - j * avg) / std::max(1.0, max_abs(avg));
  return make_report("bm-symmetric", m, resid, 1e-8, seed);
}

// -------------------------------------------------------- polarity duality

// The centered inscribed ellipsoid of a planar hull and the centered
// circumscribed ellipsoid of its polar body are polar to each other, with
// unit volume product.
inline VerificationReport check_polarity_duality(const PointCloud<double>& cloud, double eps,
                                                 std::uint64_t seed = 0) {
  if (cloud.dim() != 2)
    throw std::invalid_argument("polarity duality: planar clouds only");
  const auto planar = as_planar(cloud);
  if (!plane::origin_strictly_inside(planar))
    throw std::domain_error("polarity duality: origin not interior to the hull");

  const HPolytope hull = plane::hull_to_hrep(plane::convex_hull(planar));
  const Ellipsoid<double> inscribed = centered_maie(hull, 2).ellipsoid;

  const HPolytope polar = polar_polytope(cloud);
  PointCloud<double> polar_vertices;
  for (const auto& v : plane::vertex_enum(polar)) polar_vertices.points.push_back({v[0], v[1]});
  const Ellipsoid<double> circumscribed = centered_mice(polar_vertices, 2, eps).ellipsoid;

  const double dist = ellipsoid_distance(polar_ellipsoid(inscribed), circumscribed);
  const double volume_product = nvol(inscribed) * nvol(circumscribed);
  const double resid = std::max(dist, std::abs(volume_product - 1.0));
  return make_report("polarity-duality", cloud.size(), resid, 1e-4, seed,
                     "vol product = " + std::to_string(volume_product));
}

// --------------------------------------------------------------- line bodies

// A convex body given by a smooth gauge (<= 1 inside) plus a bounding box in
// realified coordinates; supports chord extraction along arbitrary lines.
template <class K>
struct LineBody {
  std::function<double(const Vec<K>&)> gauge;
  Vec<double> box_lo, box_hi;  // realified bounds
  std::size_t n = 0;           // dimension over the field

  static LineBody from_ellipsoid(const Ellipsoid<K>& e) {
    LineBody body;
    body.n = e.dim();
    const Mat<K> shape = e.shape;
    const Vec<K> center = e.center;
    body.gauge = [shape, center](const Vec<K>& x) {
      return quadratic_form(shape, x - center);
    };
    const auto axes = semi_axes(e);
    const double r = axes.front();
    const std::size_t rd = body.n * (field_traits<K>::is_complex ? 2 : 1);
    Vec<double> c_real;
    if constexpr (field_traits<K>::is_complex)
      c_real = realify(center);
    else
      c_real = center;
    body.box_lo.resize(rd);
    body.box_hi.resize(rd);
    for (std::size_t i = 0; i < rd; ++i) {
      body.box_lo[i] = c_real[i] - 1.05 * r;
      body.box_hi[i] = c_real[i] + 1.05 * r;
    }
    return body;
  }

  double half_extent() const {
    double s = 0.0;
    for (std::size_t i = 0; i < box_lo.size(); ++i)
      s += (box_hi[i] - box_lo[i]) * (box_hi[i] - box_lo[i]);
    return 0.5 * std::sqrt(s);
  }
};

namespace detail {

// gauge crossing between an inside and an outside parameter, bisected to 1e-12
template <class G>
double bisect_boundary(const G& g, double t_in, double t_out) {
  double lo = t_in, hi = t_out;
  for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) <= 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// 1-D chord of the body along t |-> base + t dir, through a known inside t0.
template <class K, class At>
std::optional<std::array<double, 2>> chord_interval(const LineBody<K>& body, const At& at,
                                                    double t0, double reach) {
  const auto g = [&](double t) { return body.gauge(at(t)); };
  if (g(t0) > 1.0) return std::nullopt;
  double t_hi = t0 + reach;
  double t_lo = t0 - reach;
  if (g(t_hi) <= 1.0 || g(t_lo) <= 1.0) return std::nullopt;  // box does not bound
  const double hi = bisect_boundary(g, t0, t_hi);
  const double lo = bisect_boundary(g, t0, t_lo);
  return std::array<double, 2>{lo, hi};
}

// scan for any inside parameter along the line
template <class K, class At>
std::optional<double> find_inside(const LineBody<K>& body, const At& at, double reach,
                                  int steps = 257) {
  double best = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (int s = 0; s < steps; ++s) {
    const double t = -reach + 2.0 * reach * static_cast<double>(s) / (steps - 1);
    const double v = body.gauge(at(t));
    if (v < best) { best = v; best_t = t; }
  }
  if (best <= 1.0) return best_t;
  return std::nullopt;
}

}  // namespace detail

// Center of the chord body cap {x0 + zeta v}. Over the reals this is the
// midpoint of the segment; over C the chord is a planar region whose center
// is located by two orthogonal midpoint scans and cross-validated by a third
// direction (disagreement flags a non-disk chord, i.e. a puck violation).
template <class K>
std::optional<Vec<K>> chord_center(const LineBody<K>& body, const Vec<K>& x0, const Vec<K>& v,
                                   double* puck_violation = nullptr) {
  const double reach = 2.0 * body.half_extent() / std::max(norm(v), 1e-300) + 1.0;
  if constexpr (!field_traits<K>::is_complex) {
    const auto at = [&](double t) { return x0 + t * v; };
    const auto inside = detail::find_inside(body, at, reach);
    if (!inside) return std::nullopt;
    const auto iv = detail::chord_interval(body, at, *inside, reach);
    if (!iv) return std::nullopt;
    if (puck_violation) {
      double worst = 0.0;
      for (int s = 1; s < 8; ++s) {
        const double t = (*iv)[0] + ((*iv)[1] - (*iv)[0]) * static_cast<double>(s) / 8.0;
        worst = std::max(worst, std::max(0.0, body.gauge(at(t)) - 1.0 - 1e-9));
      }
      *puck_violation = std::max(*puck_violation, worst);
    }
    return x0 + (0.5 * ((*iv)[0] + (*iv)[1])) * v;
  } else {
    const auto at_phase = [&](complex_t base, complex_t phase) {
      return [&, base, phase](double t) -> Vec<K> { return x0 + (base + phase * t) * v; };
    };
    // locate any inside point of the planar region
    complex_t zeta{};
    bool found = false;
    const int grid = 33;
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < grid && !found; ++a)
      for (int b = 0; b < grid; ++b) {
        const complex_t trial(-reach + 2.0 * reach * a / (grid - 1),
                              -reach + 2.0 * reach * b / (grid - 1));
        const double g = body.gauge(x0 + trial * v);
        if (g < best) { best = g; zeta = trial; }
        if (g <= 1.0) { found = true; zeta = trial; break; }
      }
    if (!found) return std::nullopt;

    const auto scan = [&](complex_t base, complex_t phase) -> std::optional<double> {
      const auto iv = detail::chord_interval(body, at_phase(base, phase), 0.0, reach);
      if (!iv) return std::nullopt;
      return 0.5 * ((*iv)[0] + (*iv)[1]);
    };
    const auto m1 = scan(zeta, {1.0, 0.0});
    if (!m1) return std::nullopt;
    const complex_t z1 = zeta + *m1;
    const auto m2 = scan(z1, {0.0, 1.0});
    if (!m2) return std::nullopt;
    const complex_t center = z1 + complex_t(0.0, 1.0) * *m2;
    if (puck_violation) {
      const complex_t diag(M_SQRT1_2, M_SQRT1_2);
      const auto m3 = scan(center, {1.0, 0.0});
      const auto m4 = scan(center, diag);
      const double d3 = m3 ? std::abs(*m3) : 1.0;
      const double d4 = m4 ? std::abs(*m4) : 1.0;
      *puck_violation = std::max(*puck_violation, std::max(d3, d4) * norm(v));
    }
    return x0 + center * v;
  }
}

// Chord-midpoint locus test: for a family of lines parallel to `direction`,
// extract each nonempty chord's center and fit the best affine subspace of
// the right codimension (one over R, two over C after realification) by
// total least squares. Ellipsoids pass at tiny residual; non-ellipsoidal
// pucks are expected to fail for generic directions.
template <class K>
VerificationReport brunn_midpoint_locus(const LineBody<K>& body, const Vec<K>& direction,
                                        std::size_t grid, double tol) {
  const std::size_t n = body.n;
  const double dn = norm(direction);
  if (dn <= 0.0) throw std::invalid_argument("brunn: zero direction");
  const Vec<K> v = K(1.0 / dn) * direction;

  // orthonormal completion of v over the field
  std::vector<Vec<K>> basis{v};
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    Vec<K> w = unit_vector<K>(n, i);
    for (const auto& b2 : basis) w = w - dot_h(w, b2) * b2;
    const double wn = norm(w);
    if (wn > 1e-8) basis.push_back(K(1.0 / wn) * w);
  }

  const std::size_t q = (n - 1) * (field_traits<K>::is_complex ? 2 : 1);
  const std::size_t rd_box = body.box_lo.size();

  // per-axis offset ranges from the bounding-box support in that direction
  std::vector<double> mid(q), span(q);
  std::vector<Vec<double>> axis_dir(q);
  for (std::size_t axis = 0; axis < q; ++axis) {
    const std::size_t which = field_traits<K>::is_complex ? axis / 2 : axis;
    const Vec<K>& w = basis[1 + which];
    if constexpr (field_traits<K>::is_complex)
      axis_dir[axis] = realify(axis % 2 == 0 ? w : complex_t(0.0, 1.0) * w);
    else
      axis_dir[axis] = w;
    double center_proj = 0.0, extent = 0.0;
    for (std::size_t i = 0; i < rd_box; ++i) {
      center_proj += 0.5 * (body.box_lo[i] + body.box_hi[i]) * axis_dir[axis][i];
      extent += 0.5 * (body.box_hi[i] - body.box_lo[i]) * std::abs(axis_dir[axis][i]);
    }
    mid[axis] = center_proj;
    span[axis] = 0.92 * extent;
  }

  const std::size_t codim = field_traits<K>::is_complex ? 2 : 1;
  std::vector<Vec<double>> centers;
  double puck_violation = 0.0;

  // densify up to twice if the grid is too coarse to catch enough chords
  for (int attempt = 0; attempt < 3 && centers.size() < codim + 2; ++attempt) {
    centers.clear();
    puck_violation = 0.0;
    const std::size_t g_count = grid * (std::size_t{1} << attempt);
    std::size_t total = 1;
    for (std::size_t i = 0; i < q; ++i) total *= g_count;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      Vec<K> x0(n, K{});
      for (std::size_t axis = 0; axis < q; ++axis) {
        const std::size_t g = rem % g_count;
        rem /= g_count;
        const double s =
            g_count == 1 ? mid[axis]
                         : mid[axis] - span[axis] +
                               2.0 * span[axis] * static_cast<double>(g) /
                                   static_cast<double>(g_count - 1);
        const std::size_t which = field_traits<K>::is_complex ? axis / 2 : axis;
        K coeff;
        if constexpr (field_traits<K>::is_complex)
          coeff = (axis % 2 == 0) ? complex_t(s, 0.0) : complex_t(0.0, s);
        else
          coeff = s;
        x0 = x0 + coeff * basis[1 + which];
      }
      const auto center = chord_center(body, x0, v, &puck_violation);
      if (!center) continue;
      if constexpr (field_traits<K>::is_complex)
        centers.push_back(realify(*center));
      else
        centers.push_back(*center);
    }
  }
  if (centers.size() < codim + 2)
    throw std::domain_error("brunn: direction misses the body");

  // total least squares: residuals along the smallest principal directions
  const std::size_t rd = centers.front().size();
  Vec<double> mean(rd, 0.0);
  for (const auto& cpt : centers) mean = mean + cpt;
  mean = (1.0 / static_cast<double>(centers.size())) * mean;
  Mat<double> cov(rd, rd);
  for (const auto& cpt : centers) {
    const Vec<double> d = cpt - mean;
    for (std::size_t i = 0; i < rd; ++i)
      for (std::size_t j = 0; j < rd; ++j) cov(i, j) += d[i] * d[j];
  }
  const EigenH<double> eig = eigh(hermitian_part(cov));
  double worst = 0.0;
  for (const auto& cpt : centers) {
    const Vec<double> d = cpt - mean;
    double r2 = 0.0;
    for (std::size_t k = 0; k < codim; ++k) {
      double proj = 0.0;
      for (std::size_t i = 0; i < rd; ++i) proj += eig.vectors(i, rd - 1 - k) * d[i];
      r2 += proj * proj;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  worst = std::max(worst, puck_violation);
  return make_report("brunn-locus", centers.size(), worst, tol, 0,
                     "chords = " + std::to_string(centers.size()));
}

// Hyperplane of chord centers of an ellipsoid for a given direction (the
// conjugate-diameter hyperplane): { x : <x - c, A^T v> = 0 }.
template <class K>
struct Hyperplane {
  Vec<K> normal;
  K offset;  // { z : <z, normal> = offset } with the Hermitian product
};

template <class K>
Hyperplane<K> chord_center_hyperplane(const Ellipsoid<K>& e, const Vec<K>& v) {
  const Vec<K> nrm = transpose(e.shape) * v;
  return {nrm, dot_h(e.center, nrm)};
}

// Affine map fixing the chord-center hyperplane componentwise and scaling the
// complementary line by a modulus-one scalar.
template <class K>
struct SkewReflection {
  Vec<K> origin;
  Vec<K> line_dir;  // unit
  Vec<K> normal;
  K lambda;

  Vec<K> apply(const Vec<K>& z) const {
    const Vec<K> w = z - origin;
    const K a = dot_h(w, normal) / dot_h(line_dir, normal);
    const Vec<K> lpart = a * line_dir;
    return origin + lambda * lpart + (w - lpart);
  }
};

template <class K>
struct SkewReflectionResult {
  SkewReflection<K> map;
  VerificationReport report;
};

// Builds the skew reflection carrying x to y and verifies that it preserves
// the body (gauge agreement on sampled points).
template <class K>
SkewReflectionResult<K> skew_reflection(const LineBody<K>& body, const Vec<K>& x, const Vec<K>& y,
                                        const Hyperplane<K>& h, std::size_t samples,
                                        std::uint64_t seed) {
  const Vec<K> dir = y - x;
  const double dn = norm(dir);
  if (dn <= 1e-14) throw std::invalid_argument("skew reflection: coincident points");
  const Vec<K> v = K(1.0 / dn) * dir;

  const K vn = dot_h(v, h.normal);
  if (std::abs(std::complex<double>(vn)) <= 1e-12 * norm(h.normal))
    throw std::domain_error("skew reflection: line parallel to the hyperplane");
  const K t = (h.offset - dot_h(x, h.normal)) / vn;
  const Vec<K> origin = x + t * v;

  const Vec<K> xp = x - origin;
  const Vec<K> yp = y - origin;
  if (std::abs(norm(xp) - norm(yp)) > 1e-8)
    throw std::domain_error("skew reflection: chord is not centered at the hyperplane");
  const K xi = dot_h(xp, v);
  if (std::abs(std::complex<double>(xi)) <= 1e-12)
    throw std::domain_error("skew reflection: point lies on the hyperplane");
  const K lambda = dot_h(yp, v) / xi;

  SkewReflection<K> map{origin, v, h.normal, lambda};

  double worst = std::max(0.0, std::abs(std::abs(std::complex<double>(lambda)) - 1.0) - 1e-12);
  worst = std::max(worst, norm(map.apply(x) - y));

  Rng rng(seed);
  const std::size_t rd = body.box_lo.size();
  std::size_t used = 0;
  for (std::size_t s = 0; s < 40 * samples && used < samples; ++s) {
    Vec<double> raw(rd);
    for (std::size_t i = 0; i < rd; ++i) raw[i] = rng.uniform(body.box_lo[i], body.box_hi[i]);
    Vec<K> z;
    if constexpr (field_traits<K>::is_complex)
      z = complexify(raw);
    else
      z = raw;
    const double g = body.gauge(z);
    if (g > 1.0) continue;
    ++used;
    worst = std::max(worst, std::abs(body.gauge(map.apply(z)) - g));
  }
  return {map, make_report("skew-reflection", used, worst, 1e-8, seed)};
}

}  // namespace extremal
