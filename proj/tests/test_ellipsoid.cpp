#include <catch2/catch.hpp>

#include "extremal/ellipsoid.hpp"
#include "extremal/random.hpp"

using namespace extremal;

namespace {

template <class K>
Ellipsoid<K> random_ellipsoid(Rng& rng, std::size_t n, double center_scale = 1.0) {
  return Ellipsoid<K>(K(center_scale) * rng.gaussian_vector<K>(n), rng.hpd_matrix<K>(n, 0.3, 3.0));
}

}  // namespace

TEST_CASE("membership", "[ellipsoid]") {
  const auto ball = Ellipsoid<double>::unit_ball(2);
  REQUIRE(contains(ball, {0.0, 0.0}));
  REQUIRE(contains(ball, {1.0, 0.0}, 0.0));  // boundary
  REQUIRE_FALSE(contains(ball, {1.0, 0.2}));

  Mat<double> a(1, 1);
  a(0, 0) = 4.0;
  const Ellipsoid<double> e({0.0}, a);
  REQUIRE_FALSE(contains(e, {0.6}));  // 4 * 0.36 = 1.44 > 1
  REQUIRE(contains(e, {0.5}, 0.0));

  REQUIRE_THROWS_AS(contains(ball, {1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("invalid shapes are rejected", "[ellipsoid]") {
  Mat<double> notpd(2, 2);
  notpd(0, 0) = 1.0;
  notpd(1, 1) = -1.0;
  REQUIRE_THROWS_AS(Ellipsoid<double>({0.0, 0.0}, notpd), std::domain_error);
  Mat<double> nonherm(2, 2);
  nonherm(0, 0) = nonherm(1, 1) = 1.0;
  nonherm(0, 1) = 0.5;
  REQUIRE_THROWS_AS(Ellipsoid<double>({0.0, 0.0}, nonherm), std::domain_error);
}

TEST_CASE("axis form", "[ellipsoid]") {
  SECTION("unit ball") {
    const auto f = to_axis_form(Ellipsoid<complex_t>::unit_ball(3));
    for (double l : f.lambda) REQUIRE(l == Approx(1.0));
    REQUIRE(max_abs(f.frame * adjoint(f.frame) - Mat<complex_t>::identity(3)) < 1e-10);
  }
  SECTION("diagonal shape gives sorted semi-axes") {
    Mat<double> a(2, 2);
    a(0, 0) = 4.0;
    a(1, 1) = 1.0;
    const auto f = to_axis_form(Ellipsoid<double>({0.0, 0.0}, a));
    REQUIRE(f.lambda[0] == Approx(1.0));
    REQUIRE(f.lambda[1] == Approx(0.5));
  }
  SECTION("round trip preserves membership on sampled boundary points") {
    Rng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
      const auto e = random_ellipsoid<complex_t>(rng, 1 + rng.index(4));
      const auto f = to_axis_form(e);
      const auto back = from_axis_form(f);
      REQUIRE(ellipsoid_distance(e, back) < 1e-9);
      for (int s = 0; s < 1000; ++s) {
        const Vec<complex_t> p = ellipsoid_point(f, rng.unit_vector<complex_t>(e.dim()));
        REQUIRE(quadratic_form(e.shape, p - e.center) == Approx(1.0).margin(1e-9));
      }
    }
  }
}

TEST_CASE("normalized volume", "[ellipsoid]") {
  REQUIRE(nvol(Ellipsoid<double>::unit_ball(4)) == Approx(1.0));
  REQUIRE(nvol(axis_ellipsoid<double>({2.0, 0.5}, {0.0, 0.0})) == Approx(1.0));

  Rng rng(12);
  const auto e = random_ellipsoid<double>(rng, 3, 0.0);
  const Ellipsoid<double> moved(rng.gaussian_vector<double>(3), e.shape);
  REQUIRE(nvol(e) == Approx(nvol(moved)));
}

TEST_CASE("affine images", "[ellipsoid]") {
  Rng rng(13);
  SECTION("identity map") {
    const auto e = random_ellipsoid<double>(rng, 3);
    const auto img = affine_image(e, Mat<double>::identity(3), Vec<double>(3, 0.0));
    REQUIRE(ellipsoid_distance(e, img) < 1e-12);
  }
  SECTION("unit ball to axis ellipsoid") {
    Mat<double> m(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = 0.5;
    const auto img = affine_image(Ellipsoid<double>::unit_ball(2), m, {0.0, 0.0});
    REQUIRE(ellipsoid_distance(img, axis_ellipsoid<double>({2.0, 0.5}, {0.0, 0.0})) < 1e-12);
  }
  SECTION("volume scales by |det M|, membership maps across") {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 1 + rng.index(3);
      const auto e = random_ellipsoid<complex_t>(rng, n);
      Mat<complex_t> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = rng.scalar<complex_t>() + (i == j ? complex_t(2.0, 0.0) : complex_t{});
      const Vec<complex_t> t = rng.gaussian_vector<complex_t>(n);
      const auto img = affine_image(e, m, t);
      REQUIRE(nvol(img) == Approx(std::abs(std::complex<double>(det(m))) * nvol(e)).epsilon(1e-9));
      const auto f = to_axis_form(e);
      for (int s = 0; s < 50; ++s) {
        const Vec<complex_t> p = ellipsoid_point(f, rng.ball_point<complex_t>(n));
        REQUIRE(contains(img, m * p + t, 1e-9));
      }
    }
  }
  SECTION("singular maps are rejected") {
    const auto e = random_ellipsoid<double>(rng, 2);
    Mat<double> m(2, 2, 1.0);
    REQUIRE_THROWS_AS(affine_image(e, m, {0.0, 0.0}), std::domain_error);
  }
}

TEST_CASE("polar ellipsoid", "[ellipsoid]") {
  SECTION("unit ball is self-polar") {
    const auto ball = Ellipsoid<double>::unit_ball(3);
    REQUIRE(ellipsoid_distance(polar_ellipsoid(ball), ball) < 1e-12);
  }
  SECTION("factor B maps to B^{-1}") {
    const auto e = axis_ellipsoid<double>({2.0, 0.5}, {0.0, 0.0});
    const auto p = polar_ellipsoid(e);
    REQUIRE(ellipsoid_distance(p, axis_ellipsoid<double>({0.5, 2.0}, {0.0, 0.0})) < 1e-12);
    const auto axes = semi_axes(polar_ellipsoid(axis_ellipsoid<double>({3.0, 2.0}, {0.0, 0.0})));
    REQUIRE(axes[0] == Approx(0.5));
    REQUIRE(axes[1] == Approx(1.0 / 3.0));
  }
  SECTION("volume product and involution") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng.index(4);
      const Ellipsoid<double> e(Vec<double>(n, 0.0), rng.hpd_matrix<double>(n, 0.2, 4.0));
      const auto p = polar_ellipsoid(e);
      REQUIRE(nvol(e) * nvol(p) == Approx(1.0).epsilon(1e-9));
      REQUIRE(ellipsoid_distance(polar_ellipsoid(p), e) < 1e-9);
    }
  }
  SECTION("non-centered input is rejected") {
    const Ellipsoid<double> e({0.5, 0.0}, Mat<double>::identity(2));
    REQUIRE_THROWS_AS(polar_ellipsoid(e), std::domain_error);
  }
}

TEST_CASE("complex classification by J-commutation", "[ellipsoid]") {
  Rng rng(15);
  SECTION("realified complex ellipsoids always classify complex") {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 1 + rng.index(3);
      const auto e = random_ellipsoid<complex_t>(rng, n);
      REQUIRE(is_complex_shape(realify_ellipsoid(e)));
    }
  }
  SECTION("generic real shapes do not") {
    Mat<double> a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    REQUIRE_FALSE(is_complex_shape(Ellipsoid<double>({0.0, 0.0}, a)));
  }
  SECTION("odd dimension is rejected") {
    REQUIRE_THROWS_AS(is_complex_shape(Ellipsoid<double>::unit_ball(3)), std::invalid_argument);
  }
  SECTION("complex nvol squares under realification") {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 1 + rng.index(3);
      const auto e = random_ellipsoid<complex_t>(rng, n);
      const double vc = nvol(e);
      REQUIRE(nvol(realify_ellipsoid(e)) == Approx(vc * vc).epsilon(1e-9));
    }
  }
}

TEST_CASE("membership matches the factor-norm characterization", "[ellipsoid][property]") {
  Rng rng(16);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const auto e = random_ellipsoid<complex_t>(rng, n, 0.5);
    const Mat<complex_t> b = hermitian_sqrt(e.shape);
    for (int s = 0; s < 1000; ++s) {
      const Vec<complex_t> x = e.center + complex_t(1.6, 0.0) * rng.ball_point<complex_t>(n);
      const bool via_form = contains(e, x, 0.0);
      const bool via_norm = norm(b * (x - e.center)) <= 1.0;
      REQUIRE(via_form == via_norm);
    }
  }
}
