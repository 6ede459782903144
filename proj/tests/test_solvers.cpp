#include <catch2/catch.hpp>

#include "extremal/random.hpp"
#include "extremal/solvers.hpp"

using namespace extremal;

namespace {

PointCloud<double> random_cloud(Rng& rng, std::size_t n, std::size_t count) {
  PointCloud<double> p;
  for (std::size_t i = 0; i < count; ++i) p.points.push_back(rng.gaussian_vector<double>(n));
  return p;
}

PointCloud<complex_t> random_complex_cloud(Rng& rng, std::size_t n, std::size_t count) {
  PointCloud<complex_t> p;
  for (std::size_t i = 0; i < count; ++i) p.points.push_back(rng.gaussian_vector<complex_t>(n));
  return p;
}

HPolytope box2(double hx, double hy) {
  HPolytope q;
  q.rows = {{{1, 0}, hx}, {{-1, 0}, hx}, {{0, 1}, hy}, {{0, -1}, hy}};
  return q;
}

}  // namespace

TEST_CASE("mice on landmark clouds", "[solvers][mice]") {
  SECTION("square corners give the circumscribed circle") {
    PointCloud<double> sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const auto res = mice(sq, 1e-9);
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-8);
    for (double a : semi_axes(res.ellipsoid)) REQUIRE(a == Approx(std::sqrt(2.0)).epsilon(1e-7));
    for (const auto& p : sq.points) REQUIRE(contains(res.ellipsoid, p, 1e-12));
  }
  SECTION("orthonormal frame and antipodes give the unit ball") {
    PointCloud<double> frame;
    for (std::size_t i = 0; i < 3; ++i) {
      frame.points.push_back(unit_vector<double>(3, i));
      frame.points.push_back(-1.0 * unit_vector<double>(3, i));
    }
    const auto res = mice(frame, 1e-9);
    REQUIRE(ellipsoid_distance(res.ellipsoid, Ellipsoid<double>::unit_ball(3)) < 1e-7);
  }
  SECTION("C^1 clouds agree with the planar disk oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const auto cloud = random_complex_cloud(rng, 1, 3 + rng.index(20));
      const auto res = mice(cloud, 1e-9);
      const Disk d = min_enclosing_disk(cloud, derive_seed(31, trial));
      REQUIRE(std::abs(res.ellipsoid.center[0] - complex_t(d.center[0], d.center[1])) <
              1e-6 * std::max(1.0, d.radius));
      REQUIRE(semi_axes(res.ellipsoid)[0] == Approx(d.radius).epsilon(1e-6));
    }
  }
  SECTION("flat input and bad eps are rejected") {
    PointCloud<double> flat{{{0, 0}, {1, 0}, {2, 0}}};
    REQUIRE_THROWS_AS(mice(flat, 1e-6), std::domain_error);
    PointCloud<double> ok{{{0, 0}, {1, 0}, {0, 1}}};
    REQUIRE_THROWS_AS(mice(ok, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(mice(ok, 1.5), std::invalid_argument);
  }
}

TEST_CASE("mice dual certificate", "[solvers][mice]") {
  Rng rng(32);
  const auto cloud = random_cloud(rng, 3, 14);
  const auto res = mice(cloud, 1e-8);
  double total = 0.0;
  for (double w : res.dual.weights) {
    REQUIRE(w >= 0.0);
    total += w;
  }
  REQUIRE(total == Approx(1.0).margin(1e-12));
  REQUIRE(res.report.dual_gap <= 1e-8);
  // supported points sit on the boundary
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (res.dual.weights[i] > 1e-6)
      REQUIRE(quadratic_form(res.ellipsoid.shape, cloud.points[i] - res.ellipsoid.center) ==
              Approx(1.0).margin(1e-4));
}

TEST_CASE("mice affine equivariance", "[solvers][mice][property]") {
  Rng rng(33);
  SECTION("real") {
    const auto cloud = random_cloud(rng, 2, 9);
    Mat<double> m(2, 2);
    m(0, 0) = 1.7;
    m(0, 1) = 0.4;
    m(1, 0) = -0.3;
    m(1, 1) = 2.2;
    const Vec<double> t{0.5, -1.0};
    PointCloud<double> mapped;
    for (const auto& p : cloud.points) mapped.points.push_back(m * p + t);
    const auto direct = mice(mapped, 1e-10);
    const auto via = affine_image(mice(cloud, 1e-10).ellipsoid, m, t);
    REQUIRE(ellipsoid_distance(direct.ellipsoid, via) < 1e-5);
  }
  SECTION("complex") {
    const auto cloud = random_complex_cloud(rng, 2, 8);
    Mat<complex_t> m(2, 2);
    m(0, 0) = complex_t(1.5, 0.3);
    m(0, 1) = complex_t(0.2, -0.4);
    m(1, 0) = complex_t(-0.1, 0.2);
    m(1, 1) = complex_t(0.0, 1.8);
    const Vec<complex_t> t{complex_t(0.3, 0.1), complex_t(-0.2, 0.6)};
    PointCloud<complex_t> mapped;
    for (const auto& p : cloud.points) mapped.points.push_back(m * p + t);
    const auto direct = mice(mapped, 1e-10);
    const auto via = affine_image(mice(cloud, 1e-10).ellipsoid, m, t);
    REQUIRE(ellipsoid_distance(direct.ellipsoid, via) < 1e-5);
  }
}

TEST_CASE("complex circumscribed ellipsoids are never smaller than real ones", "[solvers][mice]") {
  Rng rng(34);
  for (int trial = 0; trial < 4; ++trial) {
    const auto cloud = random_complex_cloud(rng, 2, 6 + rng.index(6));
    const auto complex_fit = mice(cloud, 1e-9);
    PointCloud<double> realified;
    for (const auto& p : cloud.points) realified.points.push_back(realify(p));
    const auto real_fit = mice(realified, 1e-9);
    const double vol_complex_in_r = nvol(complex_fit.ellipsoid) * nvol(complex_fit.ellipsoid);
    REQUIRE(nvol(real_fit.ellipsoid) <= vol_complex_in_r + 1e-6);
  }
}

TEST_CASE("maie on landmark polytopes", "[solvers][maie]") {
  SECTION("unit square holds the unit disk") {
    const auto res = maie(box2(1, 1), false);
    REQUIRE(ellipsoid_distance(res.ellipsoid, Ellipsoid<double>::unit_ball(2)) < 1e-7);
    REQUIRE(res.stationarity <= 1e-6);
  }
  SECTION("rectangle, real shape: the (2, 1) ellipse") {
    const auto res = maie(box2(2, 1), false);
    const auto axes = semi_axes(res.ellipsoid);
    REQUIRE(axes[0] == Approx(2.0).margin(1e-6));
    REQUIRE(axes[1] == Approx(1.0).margin(1e-6));
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-7);
  }
  SECTION("rectangle, complex constraint: a unit disk") {
    const auto res = maie(box2(2, 1), true);
    const auto axes = semi_axes(res.ellipsoid);
    REQUIRE(axes[0] == Approx(1.0).margin(1e-6));
    REQUIRE(axes[1] == Approx(1.0).margin(1e-6));
    REQUIRE(std::abs(res.ellipsoid.center[1]) < 1e-7);
    REQUIRE(is_complex_shape(res.ellipsoid));
    const auto as_disk = complexify_ellipsoid(res.ellipsoid);
    REQUIRE(as_disk.dim() == 1);
  }
  SECTION("standard simplex: tangent to all three edges, beats a coarse grid") {
    HPolytope simplex;
    simplex.rows = {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}};
    const auto res = maie(simplex, false);

    const HPolytope constraints = normalized(simplex);
    const Mat<double> sigma = inverse_hpd(res.ellipsoid.shape);
    for (const auto& h : constraints.rows) {
      const double support = std::sqrt(quadratic_form(sigma, h.normal));
      const double slack = h.offset - dot_h(h.normal, res.ellipsoid.center) - support;
      REQUIRE(slack >= -1e-8);
      REQUIRE(slack <= 1e-5);  // tangency at every edge
    }

    // brute-force grid over the factor and the center
    double best_grid = 0.0;
    for (double b11 = 0.05; b11 <= 0.5; b11 += 0.05)
      for (double b22 = 0.05; b22 <= 0.5; b22 += 0.05)
        for (double b12 = -0.2; b12 <= 0.2001; b12 += 0.05)
          for (double d1 = 0.1; d1 <= 0.6; d1 += 0.05)
            for (double d2 = 0.1; d2 <= 0.6; d2 += 0.05) {
              Mat<double> b(2, 2);
              b(0, 0) = b11;
              b(0, 1) = b(1, 0) = b12;
              b(1, 1) = b22;
              const double detb = b11 * b22 - b12 * b12;
              if (detb <= best_grid) continue;
              bool feasible = true;
              for (const auto& h : constraints.rows) {
                const double r = norm(b * h.normal);
                if (r + h.normal[0] * d1 + h.normal[1] * d2 > h.offset) {
                  feasible = false;
                  break;
                }
              }
              if (feasible) best_grid = detb;
            }
    REQUIRE(nvol(res.ellipsoid) >= best_grid - 1e-9);
    // closed form: the maximal inscribed ellipse of a triangle covers
    // pi/(3 sqrt(3)) of its area, here area 1/2
    REQUIRE(nvol(res.ellipsoid) == Approx(1.0 / (6.0 * std::sqrt(3.0))).epsilon(1e-5));
  }
  SECTION("degenerate polytopes are rejected") {
    HPolytope wedge;
    wedge.rows = {{{1, 0}, 1}, {{0, 1}, 1}};
    REQUIRE_THROWS_AS(maie(wedge, false), std::domain_error);
    HPolytope empty;
    empty.rows = {{{1, 0}, -2}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    REQUIRE_THROWS_AS(maie(empty, false), std::domain_error);
  }
}

TEST_CASE("maie monotonicity under constraint tightening", "[solvers][maie][property]") {
  Rng rng(35);
  HPolytope base = box2(1.5, 1.0);
  base.rows.push_back({{1, 1}, 1.8});
  const double v0 = nvol(maie(base, false).ellipsoid);
  for (std::size_t i = 0; i < base.size(); ++i) {
    HPolytope tightened = base;
    tightened.rows[i].offset *= rng.uniform(0.7, 0.95);
    REQUIRE(nvol(maie(tightened, false).ellipsoid) <= v0 + 1e-8);
  }
}

TEST_CASE("centered solvers", "[solvers][centered]") {
  SECTION("two basis points symmetrize to the centered unit circle") {
    PointCloud<double> p{{{1, 0}, {0, 1}}};
    const auto res = centered_mice(p, 2, 1e-9);
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-6);
    for (double a : semi_axes(res.ellipsoid)) REQUIRE(a == Approx(1.0).epsilon(1e-6));
  }
  SECTION("already symmetric clouds agree with the free solver") {
    Rng rng(36);
    PointCloud<double> p = random_cloud(rng, 2, 5);
    const std::size_t base = p.points.size();
    for (std::size_t i = 0; i < base; ++i) p.points.push_back(-1.0 * p.points[i]);
    const auto centered = centered_mice(p, 2, 1e-10);
    const auto free_fit = mice(p, 1e-10);
    REQUIRE(ellipsoid_distance(centered.ellipsoid, free_fit.ellipsoid) < 1e-6);
  }
  SECTION("one complex point spins into the centered unit disk") {
    PointCloud<complex_t> p{{{complex_t(1.0, 0.0)}}};
    const auto res = centered_mice(p, 64, 1e-9);
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-6);
    REQUIRE(semi_axes(res.ellipsoid)[0] == Approx(1.0).epsilon(1e-6));
  }
  SECTION("centered inscribed ellipsoid of a shifted box") {
    HPolytope shifted;
    shifted.rows = {{{1, 0}, 3}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    const auto res = centered_maie(shifted, 2);
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-6);
    for (double a : semi_axes(res.ellipsoid)) REQUIRE(a == Approx(1.0).margin(1e-6));
  }
  SECTION("complex centered inscribed disk of the rectangle") {
    const auto res = centered_maie(box2(2, 1), 16, true);
    REQUIRE(max_abs(res.ellipsoid.center) < 1e-6);
    for (double a : semi_axes(res.ellipsoid)) REQUIRE(a == Approx(1.0).margin(1e-5));
    REQUIRE(is_complex_shape(res.ellipsoid));
  }
}

TEST_CASE("uniqueness probes", "[solvers][probe]") {
  SECTION("mice collapses over both fields") {
    Rng rng(37);
    const auto cloud = random_cloud(rng, 3, 8);
    const auto rep = mice_uniqueness_probe(cloud, 1e-10, 8, 99);
    REQUIRE(rep.shape_spread < 1e-6);
    REQUIRE(rep.center_spread < 1e-6);
  }
  SECTION("complex maie spreads along the translate continuum") {
    const auto rep = maie_uniqueness_probe(box2(2, 1), true, 8, 7);
    double radius_err = 0.0, imag_err = 0.0, xmin = 1e9, xmax = -1e9;
    for (const auto& s : rep.samples) {
      for (double a : s.axes) radius_err = std::max(radius_err, std::abs(a - 1.0));
      imag_err = std::max(imag_err, std::abs(s.center[1]));
      xmin = std::min(xmin, s.center[0]);
      xmax = std::max(xmax, s.center[0]);
    }
    REQUIRE(radius_err < 1e-5);
    REQUIRE(imag_err < 1e-5);
    REQUIRE(xmax - xmin > 0.1);  // translates, not equality
  }
  SECTION("real maie collapses even with randomized barrier weights") {
    const auto rep = maie_uniqueness_probe(box2(2, 1), false, 8, 8);
    REQUIRE(rep.shape_spread < 1e-6);
    REQUIRE(rep.center_spread < 1e-6);
  }
  SECTION("too few restarts are rejected") {
    REQUIRE_THROWS_AS(maie_uniqueness_probe(box2(1, 1), false, 1, 1), std::invalid_argument);
  }
}
