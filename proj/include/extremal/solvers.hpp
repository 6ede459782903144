#pragma once

// Extremal-ellipsoid solvers.
//
// mice: minimal circumscribed ellipsoid of a finite cloud over R^n or C^n,
//   via coordinate ascent with away steps on the homogenized determinant
//   maximization problem, followed by a Newton polish of the active support.
//   The optimality certificate is the vector of dual weights u on the
//   simplex: at the optimum every support point satisfies
//   q* M(u)^{-1} q = n + 1 with q = (p, 1) and M(u) = sum u_i q_i q_i*.
//
// maie: maximal inscribed ellipsoid {B u + d : ||u|| <= 1} of a real
//   H-polytope, maximizing log det B subject to ||B a_i|| + a_i . d <= b_i.
//   Solved by barrier path following with damped Newton inner steps; the
//   shape factor may be confined to the J-commuting cone, which yields the
//   complex (disk-like) inscribed ellipsoids of even-dimensional bodies.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "extremal/bodies.hpp"
#include "extremal/ellipsoid.hpp"
#include "extremal/linalg.hpp"
#include "extremal/random.hpp"

namespace extremal {

struct SolveReport {
  std::size_t iterations = 0;
  double epsilon = 0.0;
  double dual_gap = 0.0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  bool converged = false;
};

struct DualWeights {
  std::vector<double> weights;  // nonnegative, sums to one, aligned with the cloud
};

template <class K>
struct MiceResult {
  Ellipsoid<K> ellipsoid;
  DualWeights dual;
  SolveReport report;
};

struct MiceOptions {
  std::size_t max_iterations = 100000;
  std::uint64_t seed = 0;
  bool randomize_start = false;  // Dirichlet start instead of uniform weights
  bool polish = true;
};

namespace detail {

template <class K>
Mat<K> design_matrix(const std::vector<Vec<K>>& lifted, const std::vector<double>& u) {
  const std::size_t d = lifted.front().size();
  Mat<K> m(d, d);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (u[i] <= 0.0) continue;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m(r, c) += K(u[i]) * lifted[i][r] * field_traits<K>::conj(lifted[i][c]);
  }
  return hermitian_part(m);
}

template <class K>
double design_value(const Mat<K>& minv, const Vec<K>& q) {
  return field_traits<K>::real(dot_h(q, minv * q));
}

// Newton refinement of the active support: drive q_a* M^{-1} q_a to n+1 for
// every supported point, keeping the weights on the simplex. Falls back to
// the unpolished weights when the correction system degenerates.
template <class K>
bool polish_support(const std::vector<Vec<K>>& lifted, std::vector<double>& u) {
  const std::size_t d = lifted.front().size();
  const double target = static_cast<double>(d);
  for (int round = 0; round < 16; ++round) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] > 1e-9) support.push_back(i);
    if (support.size() < d) return false;

    const Mat<K> m = design_matrix(lifted, u);
    Mat<K> minv;
    try {
      minv = inverse_hpd(m);
    } catch (const std::domain_error&) {
      return false;
    }

    const std::size_t s = support.size();
    std::vector<Vec<K>> mq(s);
    for (std::size_t a = 0; a < s; ++a) mq[a] = minv * lifted[support[a]];

    double worst = 0.0;
    std::vector<double> resid(s);
    for (std::size_t a = 0; a < s; ++a) {
      const double g = field_traits<K>::real(dot_h(lifted[support[a]], mq[a]));
      resid[a] = g - target;
      worst = std::max(worst, std::abs(resid[a]));
    }
    if (worst <= 1e-13 * target) return true;

    // [ J  1 ] [du]   [resid]      J_ab = |q_a* M^{-1} q_b|^2
    // [ 1^T 0] [nu] = [  0  ]
    Mat<double> sys(s + 1, s + 1);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        const K kab = dot_h(mq[b], lifted[support[a]]);
        sys(a, b) = std::norm(std::complex<double>(kab));
      }
      sys(a, s) = 1.0;
      sys(s, a) = 1.0;
    }
    Vec<double> rhs(s + 1, 0.0);
    for (std::size_t a = 0; a < s; ++a) rhs[a] = resid[a];

    Vec<double> du;
    try {
      du = inverse(sys, 1e-14) * rhs;
    } catch (const std::domain_error&) {
      return false;
    }

    // keep the weights nonnegative; shrink the step if it overshoots
    double limit = 1.0;
    for (std::size_t a = 0; a < s; ++a) {
      const double next = u[support[a]] + du[a];
      if (next < 0.0) limit = std::min(limit, -u[support[a]] / du[a]);
    }
    for (std::size_t a = 0; a < s; ++a)
      u[support[a]] = std::max(0.0, u[support[a]] + limit * du[a]);
    double total = 0.0;
    for (double w : u) total += w;
    for (double& w : u) w /= total;
  }
  return true;
}

}  // namespace detail

// Minimal circumscribed ellipsoid of a non-flat cloud over its field.
// The returned ellipsoid contains every point (exactly, after a final
// inflation pass) and its normalized volume is within (1+eps)^dim of optimal.
template <class K>
MiceResult<K> mice(const PointCloud<K>& cloud, double eps = 1e-6, MiceOptions opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  cloud.validate();
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("mice: eps must lie in (0, 1)");
  if (!is_nonflat(cloud, 1e-10)) throw std::domain_error("mice: flat cloud");

  const std::size_t m = cloud.size();
  const std::size_t n = cloud.dim();
  const std::size_t d = n + 1;  // lifted dimension over the field
  const double target = static_cast<double>(d);

  std::vector<Vec<K>> lifted(m);
  for (std::size_t i = 0; i < m; ++i) {
    lifted[i] = cloud.points[i];
    lifted[i].push_back(K{1});
  }

  std::vector<double> u(m, 1.0 / static_cast<double>(m));
  if (opts.randomize_start) {
    Rng rng(derive_seed(opts.seed, 0xA11CE));
    u = rng.dirichlet(m);
  }

  Mat<K> minv = inverse_hpd(detail::design_matrix(lifted, u));

  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> g(m);
  for (; iterations < opts.max_iterations; ++iterations) {
    if (iterations % 512 == 0)  // periodic refresh against rank-one drift
      minv = inverse_hpd(detail::design_matrix(lifted, u));

    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    std::size_t jmax = 0, jmin = 0;
    bool have_min = false;
    for (std::size_t i = 0; i < m; ++i) {
      g[i] = detail::design_value(minv, lifted[i]);
      if (g[i] > gmax) { gmax = g[i]; jmax = i; }
      if (u[i] > 1e-12 && g[i] < gmin) { gmin = g[i]; jmin = i; have_min = true; }
    }
    const double fw_gap = gmax - target;
    const double away_gap = have_min ? target - gmin : 0.0;
    if (fw_gap <= eps * target && away_gap <= eps * target) {
      // re-verify against rank-one drift before accepting
      minv = inverse_hpd(detail::design_matrix(lifted, u));
      double fresh = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        fresh = std::max(fresh, detail::design_value(minv, lifted[i]));
      if (fresh - target <= eps * target) {
        converged = true;
        break;
      }
      continue;
    }

    std::size_t j;
    double alpha;
    if (fw_gap >= away_gap) {
      j = jmax;
      alpha = (g[j] - target) / (target * (g[j] - 1.0));
      alpha = std::min(alpha, 0.999999);
    } else {
      j = jmin;
      const double floor_step = -u[j] / (1.0 - std::min(u[j], 1.0 - 1e-12));
      if (g[j] > 1.0 + 1e-14)
        alpha = std::max((g[j] - target) / (target * (g[j] - 1.0)), floor_step);
      else
        alpha = floor_step;
      while (1.0 - alpha + alpha * g[j] <= 1e-10) alpha *= 0.5;
    }

    // rank-one update of M^{-1} for M' = (1-alpha) M + alpha q q*
    const Vec<K>& q = lifted[j];
    const Vec<K> w = minv * q;
    const double denom = 1.0 - alpha + alpha * g[j];
    const double c1 = 1.0 / (1.0 - alpha);
    const double c2 = alpha / denom;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        minv(r, c) = K(c1) * (minv(r, c) - K(c2) * w[r] * field_traits<K>::conj(w[c]));

    for (double& ui : u) ui *= (1.0 - alpha);
    u[j] += alpha;
    if (u[j] < 1e-15) u[j] = 0.0;
  }

  if (!converged)
    throw convergence_error("mice: iteration cap reached before the dual gap closed");

  const auto max_design = [&](const std::vector<double>& weights) {
    minv = inverse_hpd(detail::design_matrix(lifted, weights));
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      worst = std::max(worst, detail::design_value(minv, lifted[i]));
    return worst;
  };

  double gmax = max_design(u);
  if (opts.polish) {
    const std::vector<double> backup = u;
    const double backup_gmax = gmax;
    if (detail::polish_support(lifted, u)) {
      gmax = max_design(u);
      if (gmax > backup_gmax && gmax - target > eps * target) {
        u = backup;  // the polish made things worse; keep the verified iterate
        gmax = max_design(u);
      }
    } else {
      u = backup;
      gmax = max_design(u);
    }
  }

  // extraction: center and shape from the blocks of M(u)
  Vec<K> center(n, K{});
  for (std::size_t i = 0; i < m; ++i)
    if (u[i] > 0.0) center = center + K(u[i]) * cloud.points[i];
  Mat<K> cov(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] <= 0.0) continue;
    const Vec<K> dp = cloud.points[i] - center;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        cov(r, c) += K(u[i]) * dp[r] * field_traits<K>::conj(dp[c]);
  }
  Mat<K> shape = conjugate(inverse_hpd(hermitian_part(cov)));
  shape = hermitian_part(K(1.0 / static_cast<double>(n)) * shape);

  double mu = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    mu = std::max(mu, quadratic_form(shape, cloud.points[i] - center));
  if (mu > 1.0) shape = hermitian_part(K(1.0 / mu) * shape);

  MiceResult<K> out{Ellipsoid<K>(center, shape), DualWeights{u}, SolveReport{}};
  out.report.iterations = iterations;
  out.report.epsilon = eps;
  out.report.dual_gap = gmax / target - 1.0;
  out.report.seed = opts.seed;
  out.report.converged = true;
  out.report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ------------------------------------------------------------------- maie

struct MaieOptions {
  double mu_final = 1e-10;
  double mu_initial = 1.0;
  double mu_factor = 0.5;
  std::size_t max_outer = 10000;
  std::size_t max_newton = 60;
  std::uint64_t seed = 0;
  bool randomize = false;  // random interior start and barrier weights
};

struct MaieResult {
  Ellipsoid<double> ellipsoid;
  SolveReport report;
  double stationarity = 0.0;
};

namespace detail {

inline std::vector<Mat<double>> symmetric_basis(std::size_t n) {
  std::vector<Mat<double>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat<double> e(n, n);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      if (i == j) e(i, i) = 1.0;
      basis.push_back(e);
    }
  return basis;
}

// Basis of the symmetric matrices commuting with J: blocks [[P, Q], [-Q, P]]
// with P symmetric and Q antisymmetric.
inline std::vector<Mat<double>> j_commuting_basis(std::size_t two_n) {
  const std::size_t n = two_n / 2;
  std::vector<Mat<double>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat<double> e(two_n, two_n);
      e(i, j) = e(j, i) = 1.0;
      e(n + i, n + j) = e(n + j, n + i) = 1.0;
      basis.push_back(e);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat<double> e(two_n, two_n);
      e(i, n + j) = 1.0;
      e(j, n + i) = -1.0;
      e(n + j, i) = 1.0;
      e(n + i, j) = -1.0;
      basis.push_back(e);
    }
  return basis;
}

struct BarrierState {
  Mat<double> b;
  Vec<double> d;
};

inline double barrier_value(const HPolytope& poly, const std::vector<double>& omega,
                            const BarrierState& st, double mu, bool& feasible) {
  feasible = true;
  Mat<double> l;
  if (!try_cholesky(st.b, l)) {
    feasible = false;
    return -std::numeric_limits<double>::infinity();
  }
  double logdet = 0.0;
  for (std::size_t i = 0; i < st.b.rows(); ++i) logdet += 2.0 * std::log(l(i, i));
  double value = logdet;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& h = poly.rows[i];
    const double t = h.offset - dot_h(h.normal, st.d) - norm(st.b * h.normal);
    if (t <= 0.0) {
      feasible = false;
      return -std::numeric_limits<double>::infinity();
    }
    value += mu * omega[i] * std::log(t);
  }
  return value;
}

}  // namespace detail

// Maximal inscribed ellipsoid of a bounded real H-polytope with nonempty
// interior. With complex_constrained the shape factor is kept in the
// J-commuting cone (dimension must be even).
inline MaieResult maie(const HPolytope& poly_in, bool complex_constrained = false,
                       MaieOptions opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const HPolytope poly = normalized(poly_in);
  const std::size_t n = poly.dim();
  if (complex_constrained && n % 2 != 0)
    throw std::invalid_argument("maie: complex constraint needs even dimension");
  if (!is_bounded_probe(poly)) throw std::domain_error("maie: polytope is unbounded");

  const Vec<double> center = analytic_center(poly);  // also rejects empty interior
  const double center_slack = min_slack(poly, center);
  if (center_slack <= 0.0) throw std::domain_error("maie: polytope has empty interior");

  const std::vector<Mat<double>> basis =
      complex_constrained ? detail::j_commuting_basis(n) : detail::symmetric_basis(n);
  const std::size_t nb = basis.size();
  const std::size_t dof = nb + n;
  const std::size_t m = poly.size();

  detail::BarrierState st;
  st.d = center;
  double radius0 = 0.5 * center_slack;
  std::vector<double> omega(m, 1.0);
  if (opts.randomize) {
    Rng rng(derive_seed(opts.seed, 0xBA221E5));
    for (double& w : omega) w = rng.uniform(0.2, 1.8);
    Vec<double> offset = rng.ball_point<double>(n);
    st.d = center + (0.45 * center_slack) * offset;
    radius0 = rng.uniform(0.2, 0.6) * min_slack(poly, st.d);
  }
  st.b = radius0 * Mat<double>::identity(n);

  // E_k a_i is constant through the whole solve
  std::vector<std::vector<Vec<double>>> ea(nb, std::vector<Vec<double>>(m));
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t i = 0; i < m; ++i) ea[k][i] = basis[k] * poly.rows[i].normal;

  const Mat<double> jmat = complex_constrained ? complex_structure(n) : Mat<double>();

  std::size_t newton_total = 0;
  std::size_t stages = 0;
  double mu = opts.mu_initial;
  double last_decrement = 0.0;
  double omega_sum = 0.0;
  for (double w : omega) omega_sum += w;

  bool done = false;
  while (!done) {
    if (mu <= opts.mu_final * (1.0 + 1e-12)) done = true;  // final stage
    if (++stages > opts.max_outer)
      throw convergence_error("maie: outer stage cap reached");

    for (std::size_t it = 0; it < opts.max_newton; ++it, ++newton_total) {
      const Mat<double> binv = inverse_hpd(st.b);
      std::vector<Mat<double>> c(nb);
      for (std::size_t k = 0; k < nb; ++k) c[k] = binv * basis[k];

      Vec<double> grad(dof, 0.0);
      Mat<double> hess(dof, dof);
      for (std::size_t k = 0; k < nb; ++k) {
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += c[k](i, i);
        grad[k] = tr;
        for (std::size_t l = k; l < nb; ++l) {
          double trkl = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j2 = 0; j2 < n; ++j2) trkl += c[k](i, j2) * c[l](j2, i);
          hess(k, l) -= trkl;
          if (l != k) hess(l, k) -= trkl;
        }
      }

      bool on_boundary = false;
      std::vector<double> dr(nb);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& h = poly.rows[i];
        const Vec<double> v = st.b * h.normal;
        const double r = norm(v);
        const double t = h.offset - dot_h(h.normal, st.d) - r;
        if (t <= 0.0) { on_boundary = true; break; }
        const double wt = mu * omega[i] / t;
        const double wt2 = mu * omega[i] / (t * t);
        for (std::size_t k = 0; k < nb; ++k) dr[k] = dot_h(v, ea[k][i]) / r;

        for (std::size_t k = 0; k < nb; ++k) {
          grad[k] -= wt * dr[k];
          for (std::size_t l = k; l < nb; ++l) {
            const double d2 = (dot_h(ea[k][i], ea[l][i]) - dr[k] * dr[l]) / r;
            const double v2 = -wt * d2 - wt2 * dr[k] * dr[l];
            hess(k, l) += v2;
            if (l != k) hess(l, k) += v2;
          }
          for (std::size_t a = 0; a < n; ++a) {
            const double v2 = -wt2 * dr[k] * h.normal[a];
            hess(k, nb + a) += v2;
            hess(nb + a, k) += v2;
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          grad[nb + a] -= wt * h.normal[a];
          for (std::size_t b2 = 0; b2 < n; ++b2)
            hess(nb + a, nb + b2) -= wt2 * h.normal[a] * h.normal[b2];
        }
      }
      if (on_boundary) throw convergence_error("maie: lost strict feasibility");

      // solve (-H) s = grad, with an escalating ridge if needed
      Mat<double> neg(dof, dof);
      for (std::size_t a = 0; a < dof; ++a)
        for (std::size_t b2 = 0; b2 < dof; ++b2) neg(a, b2) = -hess(a, b2);
      Mat<double> l;
      double ridge = 0.0;
      while (!try_cholesky(neg, l, 1e-15)) {
        ridge = (ridge == 0.0) ? 1e-12 * (1.0 + max_abs(neg)) : 10.0 * ridge;
        for (std::size_t a = 0; a < dof; ++a) neg(a, a) += ridge;
        if (ridge > 1e6) throw convergence_error("maie: Newton system not solvable");
      }
      const Vec<double> step = solve_upper_adjoint(l, solve_lower(l, grad));
      const double decrement = dot_h(grad, step);
      last_decrement = decrement;

      bool feasible = false;
      const double f0 = detail::barrier_value(poly, omega, st, mu, feasible);
      if (decrement <= 1e-18 * (1.0 + std::abs(f0))) break;

      Mat<double> db(n, n);
      for (std::size_t k = 0; k < nb; ++k) db = db + step[k] * basis[k];
      Vec<double> dd(step.begin() + static_cast<long>(nb), step.end());

      double eta = 1.0;
      bool accepted = false;
      while (eta > 1e-14) {
        detail::BarrierState trial{hermitian_part(st.b + eta * db), st.d + eta * dd};
        bool ok = false;
        const double f1 = detail::barrier_value(poly, omega, trial, mu, ok);
        if (ok && f1 >= f0 + 0.25 * eta * decrement) {
          st = trial;
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      if (complex_constrained)  // re-project against roundoff drift
        st.b = hermitian_part(0.5 * (st.b - jmat * st.b * jmat));
    }
    mu = std::max(mu * opts.mu_factor, opts.mu_final);
  }

  const Mat<double> shape = inverse_hpd(hermitian_part(st.b * st.b));
  MaieResult out{Ellipsoid<double>(st.d, shape), SolveReport{}, 0.0};
  out.report.iterations = newton_total;
  // the barrier bound mu * sum(omega) caps the objective suboptimality
  out.report.epsilon = opts.mu_final * omega_sum;
  out.report.dual_gap = opts.mu_final * omega_sum;
  out.report.seed = opts.seed;
  out.report.converged = true;
  out.report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.stationarity = std::sqrt(std::max(0.0, last_decrement)) + opts.mu_final * omega_sum;
  return out;
}

// ------------------------------------------------------- centered variants

// Centered circumscribed ellipsoid via symmetrization of the cloud.
template <class K>
MiceResult<K> centered_mice(const PointCloud<K>& cloud, std::size_t m = 64, double eps = 1e-6,
                            MiceOptions opts = {}) {
  MiceResult<K> res = mice(symmetrize(cloud, m), eps, opts);
  if (max_abs(res.ellipsoid.center) > 1e-6)
    throw convergence_error("centered_mice: center failed to vanish");
  return res;
}

// Centered inscribed ellipsoid via the symmetrized constraint intersection.
inline MaieResult centered_maie(const HPolytope& poly, std::size_t m = 2,
                                bool complex_constrained = false, MaieOptions opts = {}) {
  HPolytope sym;
  if (complex_constrained) {
    const std::size_t two_n = poly.dim();
    if (two_n % 2 != 0) throw std::invalid_argument("centered_maie: dimension must be even");
    if (m < 2) throw std::invalid_argument("centered_maie: m must be at least 2");
    const Mat<double> j = complex_structure(two_n);
    for (std::size_t k = 0; k < m; ++k) {
      const double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
      const Mat<double> rot = std::cos(th) * Mat<double>::identity(two_n) + std::sin(th) * j;
      for (const auto& h : poly.rows) sym.rows.push_back({rot * h.normal, h.offset});
    }
  } else {
    for (const auto& h : poly.rows) {
      sym.rows.push_back(h);
      sym.rows.push_back({-1.0 * h.normal, h.offset});
    }
  }
  MaieResult res = maie(sym, complex_constrained, opts);
  if (max_abs(res.ellipsoid.center) > 1e-6)
    throw convergence_error("centered_maie: center failed to vanish");
  return res;
}

// ------------------------------------------------------ uniqueness probes

struct ProbeSample {
  std::vector<double> axes;         // semi-axes, descending
  std::vector<double> center;       // realified for complex problems
};

struct SpreadReport {
  std::size_t restarts = 0;
  double shape_spread = 0.0;   // max pairwise inf-distance of sorted semi-axes
  double center_spread = 0.0;  // max pairwise inf-distance of centers
  std::uint64_t seed = 0;
  std::vector<ProbeSample> samples;
};

namespace detail {

inline void finish_spreads(SpreadReport& rep) {
  for (std::size_t i = 0; i < rep.samples.size(); ++i)
    for (std::size_t j = i + 1; j < rep.samples.size(); ++j) {
      double ds = 0.0, dc = 0.0;
      for (std::size_t k = 0; k < rep.samples[i].axes.size(); ++k)
        ds = std::max(ds, std::abs(rep.samples[i].axes[k] - rep.samples[j].axes[k]));
      for (std::size_t k = 0; k < rep.samples[i].center.size(); ++k)
        dc = std::max(dc, std::abs(rep.samples[i].center[k] - rep.samples[j].center[k]));
      rep.shape_spread = std::max(rep.shape_spread, ds);
      rep.center_spread = std::max(rep.center_spread, dc);
    }
}

template <class K>
ProbeSample probe_sample(const Ellipsoid<K>& e) {
  ProbeSample s;
  s.axes = semi_axes(e);
  if constexpr (field_traits<K>::is_complex)
    s.center = realify(e.center);
  else
    s.center = e.center;
  return s;
}

}  // namespace detail

// Multi-start probe for the circumscribed solver: the uniqueness theorem
// predicts collapse of both the shape and the center.
template <class K>
SpreadReport mice_uniqueness_probe(const PointCloud<K>& cloud, double eps, std::size_t restarts,
                                   std::uint64_t seed) {
  if (restarts < 2) throw std::invalid_argument("uniqueness probe: need at least 2 restarts");
  SpreadReport rep;
  rep.restarts = restarts;
  rep.seed = seed;
  for (std::size_t k = 0; k < restarts; ++k) {
    MiceOptions opts;
    opts.seed = derive_seed(seed, k);
    opts.randomize_start = true;
    rep.samples.push_back(detail::probe_sample(mice(cloud, eps, opts).ellipsoid));
  }
  detail::finish_spreads(rep);
  return rep;
}

// Multi-start probe for the inscribed solver. Real problems must collapse in
// both shape and center; complex-constrained problems collapse in shape only
// and may spread along the translate continuum.
inline SpreadReport maie_uniqueness_probe(const HPolytope& poly, bool complex_constrained,
                                          std::size_t restarts, std::uint64_t seed,
                                          MaieOptions base = {}) {
  if (restarts < 2) throw std::invalid_argument("uniqueness probe: need at least 2 restarts");
  SpreadReport rep;
  rep.restarts = restarts;
  rep.seed = seed;
  for (std::size_t k = 0; k < restarts; ++k) {
    MaieOptions opts = base;
    opts.seed = derive_seed(seed, k);
    opts.randomize = true;
    rep.samples.push_back(detail::probe_sample(maie(poly, complex_constrained, opts).ellipsoid));
  }
  detail::finish_spreads(rep);
  return rep;
}

}  // namespace extremal
