#pragma once

// Named verification suites: seeded random sweeps over the single-shot checks
// in theorems.hpp. The CLI `verify` subcommand and the acceptance tests both
// run these.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/theorems.hpp"

namespace extremal {

inline VerificationReport volume_lemma_suite(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = 1 + k % 6;
    if (k % 97 == 0) {
      // boundary case: margin vanishes exactly at the all-ones vector
      worst = std::max(worst, std::abs(volume_lemma_margin(std::vector<double>(n, 1.0))) - 1e-12);
      continue;
    }
    std::vector<double> lam = rng.det_one_lambda(n, 0.8);
    double dist = 0.0;
    for (double l : lam) dist = std::max(dist, std::abs(l - 1.0));
    if (dist <= 1e-6) continue;
    const double margin = volume_lemma_margin(lam);
    min_margin = std::min(min_margin, margin);
    if (!(margin > 0.0)) worst = std::max(worst, std::max(-margin, 1e-30));
  }
  std::ostringstream note;
  note << "min margin = " << min_margin;
  return make_report("volume-lemma", trials, std::max(worst, 0.0), 0.0, seed, note.str());
}

inline VerificationReport square_completion_suite(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    const double lambda = rng.uniform(1e-3, 10.0);
    const complex_t c = 1.5 * rng.scalar<complex_t>();
    const complex_t x = 1.5 * rng.scalar<complex_t>();
    worst = std::max(worst, square_completion_residual(lambda, c, x));
  }
  return make_report("square-completion", trials, worst, 1e-12, seed);
}

inline VerificationReport e3_witness_suite(std::size_t configs, std::size_t samples,
                                           std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < configs; ++k) {
    const std::uint64_t sub = derive_seed(seed, k);
    const std::size_t n = 1 + k % 3;
    const std::vector<double> lam = rng.det_one_lambda(n, 0.7);
    VerificationReport r;
    switch (k % 3) {
      case 0: {
        Vec<complex_t> c = rng.gaussian_vector<complex_t>(n);
        r = e3_containment_witness(lam, c, samples, sub);
        break;
      }
      case 1: {
        Vec<double> c = rng.gaussian_vector<double>(n);
        r = e3_containment_witness(lam, c, samples, sub);
        break;
      }
      default:
        r = e3_real_witness(rng.uniform(0.0, 1.5), 2 + n, samples, sub);
        break;
    }
    worst = std::max(worst, r.max_residual);
    total += r.trials;
  }
  return make_report("e3-witness", total, worst, 1e-10, seed);
}

inline VerificationReport e4_suite(std::size_t configs, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < configs; ++k) {
    const std::uint64_t sub = derive_seed(seed, k);
    const std::size_t n = 1 + k % 3;
    const std::vector<double> lam = rng.det_one_lambda(n, 0.6);
    VerificationReport r;
    if (k % 2 == 0) {
      Vec<complex_t> c = rng.gaussian_vector<complex_t>(n);
      const double cn = norm(c);
      if (cn > 0.85) c = complex_t(0.85 / cn, 0.0) * c;
      r = e4_containment(lam, c, samples, sub);
    } else {
      Vec<double> c = rng.gaussian_vector<double>(n);
      const double cn = norm(c);
      if (cn > 0.85) c = (0.85 / cn) * c;
      r = e4_containment(lam, c, samples, sub);
    }
    worst = std::max(worst, r.max_residual);
    total += r.trials;
  }
  return make_report("e4-containment", total, worst, 1e-10, seed);
}

// Random origin-symmetric polygon given as a point cloud P union -P.
inline PointCloud<double> random_symmetric_polygon(Rng& rng, std::size_t half_points) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    PointCloud<double> cloud;
    for (std::size_t i = 0; i < half_points; ++i) {
      const double ang = rng.uniform(0.0, 2.0 * M_PI);
      const double rad = rng.uniform(0.6, 1.6);
      cloud.points.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    const std::size_t base = cloud.points.size();
    for (std::size_t i = 0; i < base; ++i) cloud.points.push_back(-1.0 * cloud.points[i]);
    if (plane::origin_strictly_inside(as_planar(cloud))) return cloud;
  }
  throw std::runtime_error("random_symmetric_polygon: generation failed");
}

inline VerificationReport polarity_duality_suite(std::size_t count, std::uint64_t seed,
                                                 double eps = 1e-9) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const PointCloud<double> poly = random_symmetric_polygon(rng, 3 + k % 4);
    const VerificationReport r = check_polarity_duality(poly, eps, derive_seed(seed, k));
    worst = std::max(worst, r.max_residual);
  }
  return make_report("polarity-duality", count, worst, 1e-4, seed);
}

inline VerificationReport bm_suite(std::size_t count, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t d = 2 * (1 + k % 3);  // R^2, R^4, R^6
    const Mat<double> a = rng.hpd_matrix<double>(d, 0.3, 3.0);
    const VerificationReport r = check_bm_symmetric_implies_complex(a, m, derive_seed(seed, k));
    worst = std::max(worst, r.max_residual);
  }
  return make_report("bm-symmetric", count, worst, 1e-8, seed);
}

inline LineBody<double> superellipse_body() {
  LineBody<double> body;
  body.n = 2;
  body.gauge = [](const Vec<double>& x) {
    return x[0] * x[0] * x[0] * x[0] + x[1] * x[1] * x[1] * x[1];
  };
  body.box_lo = {-1.2, -1.2};
  body.box_hi = {1.2, 1.2};
  return body;
}

// Affine images of balls must produce coplanar chord midpoints for every
// direction; the quartic superellipse must fail for some direction.
inline VerificationReport brunn_suite(std::size_t bodies, std::size_t directions,
                                      std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < bodies; ++k) {
    const std::size_t n = 2 + k % 2;
    const Mat<double> shape = rng.hpd_matrix<double>(n, 0.4, 2.5);
    const Vec<double> center = 0.3 * rng.gaussian_vector<double>(n);
    const LineBody<double> body =
        LineBody<double>::from_ellipsoid(Ellipsoid<double>(center, shape));
    for (std::size_t d = 0; d < directions; ++d) {
      const Vec<double> dir = rng.unit_vector<double>(n);
      const VerificationReport r =
          brunn_midpoint_locus(body, dir, n == 2 ? std::size_t{17} : std::size_t{7}, 1e-6);
      worst = std::max(worst, r.max_residual);
    }
  }

  double quartic_worst = 0.0;
  const LineBody<double> quartic = superellipse_body();
  for (std::size_t d = 0; d < std::max<std::size_t>(directions, 8); ++d) {
    const double ang = M_PI * static_cast<double>(d) / static_cast<double>(std::max<std::size_t>(directions, 8));
    const Vec<double> dir = {std::cos(ang), std::sin(ang)};
    const VerificationReport r = brunn_midpoint_locus(quartic, dir, 17, 1e-6);
    quartic_worst = std::max(quartic_worst, r.max_residual);
  }

  std::ostringstream note;
  note << "ellipsoid residual = " << worst << ", superellipse max residual = " << quartic_worst;
  VerificationReport rep = make_report("brunn-locus", bodies * directions, worst, 1e-6, seed,
                                       note.str());
  rep.pass = rep.pass && quartic_worst > 1e-3;  // the discriminator must fire
  return rep;
}

inline VerificationReport skew_reflection_suite(std::size_t count, std::size_t samples,
                                                std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;

  // deterministic disk case: rotation by i maps 1 to i and preserves the disk
  {
    const Ellipsoid<complex_t> disk = Ellipsoid<complex_t>::unit_ball(1);
    const LineBody<complex_t> body = LineBody<complex_t>::from_ellipsoid(disk);
    const Vec<complex_t> x = {complex_t(1.0, 0.0)};
    const Vec<complex_t> y = {complex_t(0.0, 1.0)};
    const auto h = chord_center_hyperplane(disk, y - x);
    const auto res = skew_reflection(body, x, y, h, samples, derive_seed(seed, 0xD15C));
    worst = std::max(worst, res.report.max_residual);
    worst = std::max(worst, std::abs(std::complex<double>(res.map.lambda) - complex_t(0.0, 1.0)));
  }

  for (std::size_t k = 0; k < count; ++k) {
    const bool complex_case = k % 2 == 0;
    const std::uint64_t sub = derive_seed(seed, k + 1);
    if (complex_case) {
      const std::size_t n = 1 + k % 2;
      const Ellipsoid<complex_t> e(rng.gaussian_vector<complex_t>(n),
                                   rng.hpd_matrix<complex_t>(n, 0.5, 2.0));
      const LineBody<complex_t> body = LineBody<complex_t>::from_ellipsoid(e);
      const auto axis = to_axis_form(e);
      const Vec<complex_t> x = ellipsoid_point(axis, rng.unit_vector<complex_t>(n));
      Vec<complex_t> y = ellipsoid_point(axis, rng.unit_vector<complex_t>(n));
      if (norm(y - x) < 1e-3) y = ellipsoid_point(axis, -1.0 * rng.unit_vector<complex_t>(n));
      const auto h = chord_center_hyperplane(e, y - x);
      const auto res = skew_reflection(body, x, y, h, samples, sub);
      worst = std::max(worst, res.report.max_residual);
      // group behavior: applying the conjugate scalar undoes the map
      SkewReflection<complex_t> undo = res.map;
      undo.lambda = std::conj(undo.lambda);
      Rng zr(sub);
      for (int s = 0; s < 32; ++s) {
        const Vec<complex_t> z = ellipsoid_point(axis, zr.ball_point<complex_t>(n));
        worst = std::max(worst, norm(undo.apply(res.map.apply(z)) - z));
      }
    } else {
      const std::size_t n = 2 + k % 2;
      const Ellipsoid<double> e(rng.gaussian_vector<double>(n), rng.hpd_matrix<double>(n, 0.5, 2.0));
      const LineBody<double> body = LineBody<double>::from_ellipsoid(e);
      const auto axis = to_axis_form(e);
      const Vec<double> x = ellipsoid_point(axis, rng.unit_vector<double>(n));
      Vec<double> y = ellipsoid_point(axis, rng.unit_vector<double>(n));
      if (norm(y - x) < 1e-3) y = ellipsoid_point(axis, -1.0 * rng.unit_vector<double>(n));
      const auto h = chord_center_hyperplane(e, y - x);
      const auto res = skew_reflection(body, x, y, h, samples, sub);
      worst = std::max(worst, res.report.max_residual);
      SkewReflection<double> undo = res.map;
      Rng zr(sub);
      for (int s = 0; s < 32; ++s) {
        const Vec<double> z = ellipsoid_point(axis, zr.ball_point<double>(n));
        worst = std::max(worst, norm(undo.apply(res.map.apply(z)) - z));
      }
    }
  }
  return make_report("skew-reflection", count, worst, 1e-8, seed);
}

// ------------------------------------------------------------ suite registry

inline std::vector<std::string> suite_names() {
  return {"volume-lemma", "square-completion", "e3-witness",   "e4-containment",
          "polarity-duality", "bm-symmetric",  "brunn-locus", "skew-reflection"};
}

inline VerificationReport run_suite(const std::string& name, std::size_t trials,
                                    std::uint64_t seed) {
  if (name == "volume-lemma") return volume_lemma_suite(trials ? trials : 10000, seed);
  if (name == "square-completion") return square_completion_suite(trials ? trials : 10000, seed);
  if (name == "e3-witness") return e3_witness_suite(trials ? trials : 20, 1000, seed);
  if (name == "e4-containment") return e4_suite(trials ? trials : 20, 1000, seed);
  if (name == "polarity-duality") return polarity_duality_suite(trials ? trials : 10, seed);
  if (name == "bm-symmetric") return bm_suite(trials ? trials : 50, 256, seed);
  if (name == "brunn-locus") return brunn_suite(trials ? trials : 8, 12, seed);
  if (name == "skew-reflection") return skew_reflection_suite(trials ? trials : 20, 200, seed);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace extremal
