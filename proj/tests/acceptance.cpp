// Acceptance suite: ten oracle- and property-based criteria at fixed
// tolerances, one pass/fail line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "extremal/random.hpp"
#include "extremal/solvers.hpp"
#include "extremal/suites.hpp"

using namespace extremal;

namespace {

int failures = 0;

void line(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %-34s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), spec, a, b, c);
  return buf;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. mice matches the exact planar disk oracle on C^1 clouds
void criterion_disk_oracle() {
  double worst = 0.0, slowest = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng(derive_seed(0xACC1, k));
    PointCloud<complex_t> cloud;
    const std::size_t count = 3 + rng.index(38);
    for (std::size_t i = 0; i < count; ++i)
      cloud.points.push_back({1.5 * rng.scalar<complex_t>()});
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = mice(cloud, 1e-9);
    slowest = std::max(slowest, seconds_since(t0));
    const Disk d = min_enclosing_disk(cloud, derive_seed(0xACC1D15C, k));
    const double scale = std::max(1.0, d.radius);
    worst = std::max(worst, std::abs(semi_axes(res.ellipsoid)[0] - d.radius) / scale);
    worst = std::max(worst,
                     std::abs(res.ellipsoid.center[0] - complex_t(d.center[0], d.center[1])) / scale);
  }
  line(1, "mice-vs-disk-oracle", worst <= 1e-5 && slowest < 1.0,
       fmt("worst rel dev %.2e, slowest %.3f s", worst, slowest));
}

// 2. multi-start mice collapses to one ellipsoid over R^3 and C^2
void criterion_mice_uniqueness() {
  double shape = 0.0, center = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rng rng(derive_seed(0xACC2, k));
    PointCloud<double> cloud;
    const std::size_t count = 6 + rng.index(7);
    for (std::size_t i = 0; i < count; ++i) cloud.points.push_back(rng.gaussian_vector<double>(3));
    const auto rep = mice_uniqueness_probe(cloud, 1e-10, 20, derive_seed(0xACC2u, 100 + k));
    shape = std::max(shape, rep.shape_spread);
    center = std::max(center, rep.center_spread);
  }
  for (int k = 0; k < 10; ++k) {
    Rng rng(derive_seed(0xACC3, k));
    PointCloud<complex_t> cloud;
    const std::size_t count = 5 + rng.index(6);
    for (std::size_t i = 0; i < count; ++i)
      cloud.points.push_back(rng.gaussian_vector<complex_t>(2));
    const auto rep = mice_uniqueness_probe(cloud, 1e-10, 20, derive_seed(0xACC3u, 100 + k));
    shape = std::max(shape, rep.shape_spread);
    center = std::max(center, rep.center_spread);
  }
  line(2, "mice-uniqueness", shape <= 1e-5 && center <= 1e-5,
       fmt("shape spread %.2e, center spread %.2e", shape, center));
}

HPolytope rectangle_4x2() {
  HPolytope q;
  q.rows = {{{1, 0}, 2}, {{-1, 0}, 2}, {{0, 1}, 1}, {{0, -1}, 1}};
  return q;
}

// 3. complex inscribed disks of the 4x2 rectangle: identical radius,
//    genuinely different centers (translates, not equality)
void criterion_complex_translates() {
  const auto rep = maie_uniqueness_probe(rectangle_4x2(), true, 20, 0xACC4);
  double radius_err = 0.0, imag_err = 0.0, xmin = 1e300, xmax = -1e300;
  for (const auto& s : rep.samples) {
    for (double a : s.axes) radius_err = std::max(radius_err, std::abs(a - 1.0));
    imag_err = std::max(imag_err, std::abs(s.center[1]));
    xmin = std::min(xmin, s.center[0]);
    xmax = std::max(xmax, s.center[0]);
  }
  const bool pass = radius_err <= 1e-4 && imag_err <= 1e-4 && (xmax - xmin) >= 0.1;
  line(3, "complex-maie-translates", pass,
       fmt("radius dev %.2e, imag %.2e, center spread %.3f", radius_err, imag_err, xmax - xmin));
}

// 4. without the complex constraint the same rectangle has one ellipse
void criterion_real_maie_unique() {
  const auto rep = maie_uniqueness_probe(rectangle_4x2(), false, 20, 0xACC5);
  double axes_err = 0.0;
  for (const auto& s : rep.samples) {
    axes_err = std::max(axes_err, std::abs(s.axes[0] - 2.0));
    axes_err = std::max(axes_err, std::abs(s.axes[1] - 1.0));
  }
  const bool pass = rep.shape_spread <= 1e-5 && rep.center_spread <= 1e-5 && axes_err <= 1e-3;
  line(4, "real-maie-uniqueness", pass,
       fmt("spread %.2e / %.2e, axes dev %.2e", rep.shape_spread, rep.center_spread, axes_err));
}

// 5. the two auxiliary lemmas at scale
void criterion_lemmas() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto vol = volume_lemma_suite(10000, 0xACC6);
  const auto sq = square_completion_suite(10000, 0xACC7);
  const double elapsed = seconds_since(t0);
  line(5, "lemma-suites", vol.pass && sq.pass && elapsed < 5.0,
       fmt("volume viol %.2e, completion resid %.2e, %.2f s", vol.max_residual, sq.max_residual,
           elapsed));
}

// 6. proof-construction replays with zero witness failures
void criterion_witnesses() {
  const auto e3 = e3_witness_suite(20, 1000, 0xACC8);
  const auto e4 = e4_suite(20, 1000, 0xACC9);
  line(6, "containment-witnesses", e3.pass && e4.pass,
       fmt("e3 resid %.2e, e4 resid %.2e", e3.max_residual, e4.max_residual));
}

// 7. polarity duality of the centered extremal ellipsoids
void criterion_polarity() {
  const auto rep = polarity_duality_suite(10, 0xACCA);
  line(7, "polarity-duality", rep.pass, fmt("max residual %.2e", rep.max_residual));
}

// 8. circle averages of random forms always commute with J
void criterion_bm() {
  const auto rep = bm_suite(50, 256, 0xACCB);
  line(8, "bm-symmetric-implies-complex", rep.pass, fmt("commutator %.2e", rep.max_residual));
}

// 9. chord-midpoint discrimination: affine balls pass, the quartic fails
void criterion_brunn() {
  Rng rng(0xACCC);
  double ell_worst = 0.0;
  for (int body_idx = 0; body_idx < 20; ++body_idx) {
    const std::size_t n = 2 + body_idx % 2;
    const Ellipsoid<double> e(0.3 * rng.gaussian_vector<double>(n),
                              rng.hpd_matrix<double>(n, 0.4, 2.5));
    const auto body = LineBody<double>::from_ellipsoid(e);
    for (int d = 0; d < 20; ++d) {
      const auto rep = brunn_midpoint_locus(body, rng.unit_vector<double>(n),
                                            n == 2 ? std::size_t{17} : std::size_t{7}, 1e-6);
      ell_worst = std::max(ell_worst, rep.max_residual);
    }
  }
  double quartic_best = 0.0;
  const auto quartic = superellipse_body();
  for (int d = 0; d < 20; ++d) {
    const double ang = M_PI * d / 20.0;
    const auto rep = brunn_midpoint_locus(quartic, {std::cos(ang), std::sin(ang)}, 17, 1e-6);
    quartic_best = std::max(quartic_best, rep.max_residual);
  }
  line(9, "brunn-discrimination", ell_worst <= 1e-6 && quartic_best > 1e-3,
       fmt("affine balls %.2e, superellipse %.2e", ell_worst, quartic_best));
}

// 10. centering never shrinks the circumscribed volume
void criterion_centered() {
  double center_worst = 0.0, vol_worst = -1e300;
  for (int k = 0; k < 10; ++k) {
    Rng rng(derive_seed(0xACCD, k));
    PointCloud<double> cloud;
    const std::size_t count = 4 + rng.index(9);
    for (std::size_t i = 0; i < count; ++i) cloud.points.push_back(rng.gaussian_vector<double>(2));
    const auto centered = centered_mice(cloud, 2, 1e-10);
    const auto free_fit = mice(cloud, 1e-10);
    center_worst = std::max(center_worst, max_abs(centered.ellipsoid.center));
    vol_worst = std::max(vol_worst, nvol(free_fit.ellipsoid) - nvol(centered.ellipsoid));
  }
  for (int k = 0; k < 10; ++k) {
    Rng rng(derive_seed(0xACCE, k));
    PointCloud<complex_t> cloud;
    const std::size_t count = 4 + rng.index(9);
    for (std::size_t i = 0; i < count; ++i)
      cloud.points.push_back(rng.gaussian_vector<complex_t>(1));
    const auto centered = centered_mice(cloud, 64, 1e-10);
    const auto free_fit = mice(cloud, 1e-10);
    center_worst = std::max(center_worst, max_abs(centered.ellipsoid.center));
    vol_worst = std::max(vol_worst, nvol(free_fit.ellipsoid) - nvol(centered.ellipsoid));
  }
  line(10, "centered-solver-consistency", center_worst <= 1e-6 && vol_worst <= 1e-8,
       fmt("center %.2e, free minus centered vol %.2e", center_worst, vol_worst));
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto want = [&](int id) {
    if (only.empty()) return true;
    for (int v : only)
      if (v == id) return true;
    return false;
  };

  if (want(1)) criterion_disk_oracle();
  if (want(2)) criterion_mice_uniqueness();
  if (want(3)) criterion_complex_translates();
  if (want(4)) criterion_real_maie_unique();
  if (want(5)) criterion_lemmas();
  if (want(6)) criterion_witnesses();
  if (want(7)) criterion_polarity();
  if (want(8)) criterion_bm();
  if (want(9)) criterion_brunn();
  if (want(10)) criterion_centered();

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
