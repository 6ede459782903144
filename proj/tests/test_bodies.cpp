#include <catch2/catch.hpp>

#include <algorithm>

#include "extremal/bodies.hpp"
#include "extremal/random.hpp"

using namespace extremal;

namespace {

// planar cloud whose hull strictly contains the origin
PointCloud<double> random_from(Rng& rng) {
  PointCloud<double> p;
  const std::size_t k = 4 + rng.index(4);
  for (std::size_t i = 0; i < k; ++i) {
    const double ang = 2.0 * M_PI * (static_cast<double>(i) + rng.uniform(0.05, 0.95)) /
                       static_cast<double>(k);
    const double rad = rng.uniform(0.7, 1.5);
    p.points.push_back({rad * std::cos(ang), rad * std::sin(ang)});
  }
  return p;
}

}  // namespace

TEST_CASE("non-flatness", "[bodies]") {
  SECTION("affinely independent points are non-flat") {
    PointCloud<double> p{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    REQUIRE(is_nonflat(p));
  }
  SECTION("repeated points are flat") {
    PointCloud<double> p{{{1, 2}, {1, 2}, {1, 2}}};
    REQUIRE_FALSE(is_nonflat(p));
  }
  SECTION("a complex line in C^2 is flat over C") {
    PointCloud<complex_t> p;
    const Vec<complex_t> dir{complex_t(1, 0), complex_t(0, 2)};
    for (int k = 0; k < 6; ++k) {
      const complex_t z(0.3 * k, 0.7 - 0.2 * k);
      p.points.push_back(z * dir);
    }
    REQUIRE_FALSE(is_nonflat(p));
    // realified, those points span a 2-plane in R^4: still flat there
  }
  SECTION("empty cloud is rejected") {
    REQUIRE_THROWS_AS(is_nonflat(PointCloud<double>{}), std::invalid_argument);
  }
}

TEST_CASE("symmetrization", "[bodies]") {
  SECTION("real clouds get the antipodal copy") {
    PointCloud<double> p{{{1, 0}}};
    const auto s = symmetrize(p, 64);  // m is forced to 2 over R
    REQUIRE(s.size() == 2);
    REQUIRE(norm(s.points[0] - Vec<double>{1, 0}) < 1e-15);
    REQUIRE(norm(s.points[1] - Vec<double>{-1, 0}) < 1e-15);
  }
  SECTION("fourth roots of unity in C^1") {
    PointCloud<complex_t> p{{{complex_t(1, 0)}}};
    const auto s = symmetrize(p, 4);
    REQUIRE(s.size() == 4);
    const std::vector<complex_t> expect{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& target : expect) {
      bool found = false;
      for (const auto& q : s.points) found = found || std::abs(q[0] - target) < 1e-12;
      REQUIRE(found);
    }
  }
  SECTION("idempotent as a point set, norms preserved, size bounded") {
    Rng rng(21);
    PointCloud<complex_t> p;
    for (int i = 0; i < 5; ++i) p.points.push_back(rng.gaussian_vector<complex_t>(2));
    const std::size_t m = 8;
    const auto s1 = symmetrize(p, m);
    const auto s2 = symmetrize(s1, m);
    REQUIRE(s1.size() <= m * p.size());
    REQUIRE(s2.size() == s1.size());
    for (const auto& q : s2.points) {
      double closest = 1e300;
      for (const auto& r : s1.points) closest = std::min(closest, norm(q - r));
      REQUIRE(closest < 1e-12);
    }
    // every output point keeps the norm of some input point
    for (const auto& q : s1.points) {
      bool matched = false;
      for (const auto& r : p.points) matched = matched || std::abs(norm(q) - norm(r)) < 1e-12;
      REQUIRE(matched);
    }
    // invariance under each unit scalar
    for (std::size_t k = 0; k < m; ++k) {
      const double t = 2.0 * M_PI * k / m;
      const complex_t zeta(std::cos(t), std::sin(t));
      for (const auto& q : s1.points) {
        const Vec<complex_t> rotated = zeta * q;
        double closest = 1e300;
        for (const auto& r : s1.points) closest = std::min(closest, norm(rotated - r));
        REQUIRE(closest < 1e-12);
      }
    }
  }
  SECTION("m below 2 is rejected") {
    PointCloud<complex_t> p{{{complex_t(1, 0)}}};
    REQUIRE_THROWS_AS(symmetrize(p, 1), std::invalid_argument);
  }
}

TEST_CASE("polar polytope", "[bodies]") {
  SECTION("square corners give the cross-polytope") {
    PointCloud<double> sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const HPolytope polar = polar_polytope(sq);
    REQUIRE(polar.size() == 4);
    auto verts = plane::vertex_enum(polar);
    REQUIRE(verts.size() == 4);
    for (const auto& v : verts)
      REQUIRE(std::abs(v[0]) + std::abs(v[1]) == Approx(1.0).margin(1e-9));
  }
  SECTION("one point is one halfplane") {
    PointCloud<double> p{{{2, 0}, {-2, 0}, {0, 2}, {0, -2}}};
    const HPolytope polar = polar_polytope(p);
    // the constraint from (2, 0) is x <= 1/2
    REQUIRE(polar.rows[0].normal == Vec<double>{2, 0});
    REQUIRE(polar.rows[0].offset == 1.0);
    REQUIRE(min_slack(normalized(polar), {0.5, 0.0}) == Approx(0.0).margin(1e-12));
  }
  SECTION("polars of boundary samples shrink toward the self-polar ball") {
    const auto sample = [](std::size_t count) {
      PointCloud<double> p;
      for (std::size_t k = 0; k < count; ++k) {
        const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count);
        p.points.push_back({std::cos(t), std::sin(t)});
      }
      return p;
    };
    const auto coarse = plane::vertex_enum(polar_polytope(sample(8)));
    const auto fine = plane::vertex_enum(polar_polytope(sample(32)));
    double r_coarse = 0.0, r_fine = 0.0;
    for (const auto& v : coarse) r_coarse = std::max(r_coarse, std::hypot(v[0], v[1]));
    for (const auto& v : fine) r_fine = std::max(r_fine, std::hypot(v[0], v[1]));
    REQUIRE(r_coarse >= r_fine);   // shrinking supersets of the ball
    REQUIRE(r_fine >= 1.0 - 1e-12);
    REQUIRE(r_fine < 1.01);
  }
  SECTION("polarity reverses inclusion") {
    Rng rng(22);
    PointCloud<double> small = random_from(rng);
    // build by extension: Q contains P
    PointCloud<double> big = small;
    big.points.push_back({1.7, 0.1});
    const HPolytope polar_small = polar_polytope(small);
    const HPolytope polar_big = polar_polytope(big);
    // every point of polar(big) satisfies polar(small)'s constraints
    for (const auto& v : plane::vertex_enum(polar_big))
      REQUIRE(min_slack(normalized(polar_small), {v[0], v[1]}) >= -1e-9);
  }
  SECTION("double polar returns the hull") {
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
      PointCloud<double> p = random_from(rng);
      const auto hull = plane::convex_hull(as_planar(p));
      PointCloud<double> polar_verts;
      for (const auto& v : plane::vertex_enum(polar_polytope(p)))
        polar_verts.points.push_back({v[0], v[1]});
      const auto hull2 = plane::vertex_enum(polar_polytope(polar_verts));
      REQUIRE(hull2.size() == hull.size());
      for (const auto& v : hull) {
        double closest = 1e300;
        for (const auto& w : hull2) closest = std::min(closest, std::hypot(v[0] - w[0], v[1] - w[1]));
        REQUIRE(closest < 1e-8);
      }
    }
  }
  SECTION("origin outside the hull is rejected") {
    PointCloud<double> p{{{1, 1}, {2, 1}, {1, 2}}};
    REQUIRE_THROWS_AS(polar_polytope(p), std::domain_error);
  }
}

TEST_CASE("smallest enclosing disk", "[bodies]") {
  SECTION("two points sit on a diameter") {
    PointCloud<double> p{{{0, 0}, {2, 0}}};
    const Disk d = min_enclosing_disk(p, 1);
    REQUIRE(d.center[0] == Approx(1.0));
    REQUIRE(d.center[1] == Approx(0.0).margin(1e-12));
    REQUIRE(d.radius == Approx(1.0));
  }
  SECTION("equilateral triangle circumradius") {
    PointCloud<double> p{{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}}};
    const Disk d = min_enclosing_disk(p, 2);
    REQUIRE(d.radius == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SECTION("one point degenerates to radius zero") {
    PointCloud<complex_t> p{{{complex_t(0.5, -0.25)}}};
    const Disk d = min_enclosing_disk(p, 3);
    REQUIRE(d.degenerate());
    REQUIRE(d.center[0] == Approx(0.5));
    REQUIRE(d.center[1] == Approx(-0.25));
  }
  SECTION("dominates random feasible disks") {
    Rng rng(24);
    PointCloud<double> p;
    for (int i = 0; i < 40; ++i) p.points.push_back(rng.gaussian_vector<double>(2));
    const Disk best = min_enclosing_disk(p, 4);
    for (int trial = 0; trial < 1000; ++trial) {
      const Vec<double> c = rng.gaussian_vector<double>(2);
      double r = 0.0;
      for (const auto& q : p.points) r = std::max(r, std::hypot(q[0] - c[0], q[1] - c[1]));
      REQUIRE(best.radius <= r + 1e-12);
    }
    for (const auto& q : p.points)
      REQUIRE(std::hypot(q[0] - best.center[0], q[1] - best.center[1]) <= best.radius + 1e-12);
  }
}

TEST_CASE("polytope probes", "[bodies]") {
  HPolytope square;
  square.rows = {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
  SECTION("analytic center of the square is the origin") {
    REQUIRE(max_abs(analytic_center(square)) < 1e-8);
  }
  SECTION("bounded probe accepts the square and rejects a wedge") {
    REQUIRE(is_bounded_probe(square));
    HPolytope wedge;
    wedge.rows = {{{1, 0}, 1}, {{0, 1}, 1}};
    REQUIRE_FALSE(is_bounded_probe(wedge));
    HPolytope slab3;
    slab3.rows = {{{1, 0, 0}, 1}, {{-1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, -1, 0}, 1}};
    REQUIRE_FALSE(is_bounded_probe(slab3));
  }
  SECTION("empty interior is detected") {
    HPolytope empty;
    empty.rows = {{{1, 0}, -1}, {{-1, 0}, -1}};
    REQUIRE_THROWS_AS(analytic_center(empty), std::domain_error);
  }
  SECTION("off-center feasibility recovery") {
    HPolytope shifted;
    shifted.rows = {{{1, 0}, 11}, {{-1, 0}, -9}, {{0, 1}, 6}, {{0, -1}, -4}};
    const auto c = analytic_center(shifted);  // box [9,11] x [4,6]
    REQUIRE(c[0] == Approx(10.0).margin(1e-6));
    REQUIRE(c[1] == Approx(5.0).margin(1e-6));
  }
}
