#pragma once

// The ellipsoid data model. An ellipsoid is stored as a center c and a
// Hermitian positive definite shape matrix A; membership is
//   (x - c)^T A conj(x - c) <= 1.
// The axis form keeps the semi-axes and a unitary frame instead.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "extremal/linalg.hpp"

namespace extremal {

template <class K>
struct Ellipsoid {
  Vec<K> center;
  Mat<K> shape;

  Ellipsoid(Vec<K> c, Mat<K> a) : center(std::move(c)), shape(std::move(a)) {
    if (!shape.square() || shape.rows() != center.size())
      throw std::invalid_argument("ellipsoid: center/shape dimension mismatch");
    require_hpd(shape, "ellipsoid shape");
    shape = hermitian_part(shape);
  }

  static Ellipsoid unit_ball(std::size_t n) {
    return Ellipsoid(Vec<K>(n, K{}), Mat<K>::identity(n));
  }

  std::size_t dim() const { return center.size(); }
};

template <class K>
bool contains(const Ellipsoid<K>& e, const Vec<K>& x, double tol = 0.0) {
  if (x.size() != e.dim()) throw std::invalid_argument("contains: dimension mismatch");
  return quadratic_form(e.shape, x - e.center) <= 1.0 + tol;
}

// det(A)^(-1/2), the volume of the ellipsoid normalized so the unit ball has
// volume one. Equals the product of the semi-axes; translation invariant.
template <class K>
double nvol(const Ellipsoid<K>& e) {
  return 1.0 / std::sqrt(det_hpd(e.shape));
}

// Semi-axis lengths, sorted descending.
template <class K>
std::vector<double> semi_axes(const Ellipsoid<K>& e) {
  const EigenH<K> eig = eigh(e.shape);
  std::vector<double> axes(eig.values.size());
  for (std::size_t i = 0; i < axes.size(); ++i)
    axes[i] = 1.0 / std::sqrt(eig.values[axes.size() - 1 - i]);
  return axes;
}

template <class K>
struct AxisForm {
  std::vector<double> lambda;  // semi-axes, descending
  Mat<K> frame;                // unitary; the ellipsoid is {frame (lambda (.) u) + center}
  Vec<K> center;
};

template <class K>
AxisForm<K> to_axis_form(const Ellipsoid<K>& e) {
  const EigenH<K> eig = eigh(e.shape);  // values descending
  const std::size_t n = e.dim();
  AxisForm<K> f;
  f.center = e.center;
  f.lambda.resize(n);
  f.frame = Mat<K>(n, n);
  // reverse so the semi-axes come out descending; the frame for the membership
  // parametrization is the conjugate eigenbasis (shape convention x^T A conj(x))
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = n - 1 - j;
    if (!(eig.values[src] > 0.0))
      throw std::domain_error("to_axis_form: shape not positive definite");
    f.lambda[j] = 1.0 / std::sqrt(eig.values[src]);
    for (std::size_t i = 0; i < n; ++i)
      f.frame(i, j) = field_traits<K>::conj(eig.vectors(i, src));
  }
  return f;
}

template <class K>
Ellipsoid<K> from_axis_form(const AxisForm<K>& f) {
  const std::size_t n = f.lambda.size();
  if (f.frame.rows() != n || f.frame.cols() != n || f.center.size() != n)
    throw std::invalid_argument("from_axis_form: dimension mismatch");
  Mat<K> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      K acc{};
      for (std::size_t k = 0; k < n; ++k) {
        if (!(f.lambda[k] > 0.0)) throw std::domain_error("from_axis_form: nonpositive axis");
        acc += f.frame(i, k) * K(1.0 / (f.lambda[k] * f.lambda[k])) *
               field_traits<K>::conj(f.frame(j, k));
      }
      a(i, j) = acc;
    }
  return Ellipsoid<K>(f.center, hermitian_part(conjugate(a)));
}

// Axis-aligned ellipsoid {lambda (.) u : u in the unit ball} + center.
template <class K>
Ellipsoid<K> axis_ellipsoid(const std::vector<double>& lambda, Vec<K> center) {
  const std::size_t n = lambda.size();
  if (center.empty()) center.assign(n, K{});
  Mat<K> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambda[i] > 0.0)) throw std::domain_error("axis_ellipsoid: nonpositive axis");
    a(i, i) = K(1.0 / (lambda[i] * lambda[i]));
  }
  return Ellipsoid<K>(std::move(center), std::move(a));
}

// Image of e under x |-> m x + t. The normalized volume scales by |det m|.
template <class K>
Ellipsoid<K> affine_image(const Ellipsoid<K>& e, const Mat<K>& m, const Vec<K>& t) {
  if (!m.square() || m.rows() != e.dim() || t.size() != e.dim())
    throw std::invalid_argument("affine_image: dimension mismatch");
  const Mat<K> minv = inverse(m);  // throws on singular input
  const Mat<K> new_shape = hermitian_part(transpose(minv) * e.shape * conjugate(minv));
  Vec<K> new_center = m * e.center + t;
  return Ellipsoid<K>(std::move(new_center), new_shape);
}

// Polar of an origin-centered real ellipsoid: shape A |-> A^{-1}. There is no
// complex polarity, so this is real-only by construction.
inline Ellipsoid<double> polar_ellipsoid(const Ellipsoid<double>& e, double tol = 1e-10) {
  if (max_abs(e.center) > tol)
    throw std::domain_error("polar_ellipsoid: ellipsoid must be centered at the origin");
  return Ellipsoid<double>(Vec<double>(e.dim(), 0.0), inverse_hpd(e.shape));
}

// A real ellipsoid in R^{2n} is (the realification of) a complex one exactly
// when its shape commutes with the complex structure J.
inline bool is_complex_shape(const Ellipsoid<double>& e, double tol = 1e-8) {
  if (e.dim() % 2 != 0) throw std::invalid_argument("is_complex_shape: odd dimension");
  const Mat<double> j = complex_structure(e.dim());
  const Mat<double> comm = e.shape * j - j * e.shape;
  return max_abs(comm) <= tol * std::max(1.0, max_abs(e.shape));
}

template <class K>
Ellipsoid<double> realify_ellipsoid(const Ellipsoid<K>& e) {
  if constexpr (field_traits<K>::is_complex)
    return Ellipsoid<double>(realify(e.center), realify_form(e.shape));
  else
    return e;
}

inline Ellipsoid<complex_t> complexify_ellipsoid(const Ellipsoid<double>& e, double tol = 1e-9) {
  return Ellipsoid<complex_t>(complexify(e.center), complexify_form(e.shape, tol));
}

// Canonical distance used by the uniqueness statements: shape matrices in
// relative max-norm, centers in absolute max-norm.
template <class K>
double ellipsoid_distance(const Ellipsoid<K>& a, const Ellipsoid<K>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ellipsoid_distance: dimension mismatch");
  const double shape_scale = std::max({max_abs(a.shape), max_abs(b.shape), 1e-300});
  const double ds = max_abs(a.shape - b.shape) / shape_scale;
  const double dc = max_abs(a.center - b.center);
  return std::max(ds, dc);
}

template <class K>
bool ellipsoid_equal(const Ellipsoid<K>& a, const Ellipsoid<K>& b, double tol = 1e-8) {
  return ellipsoid_distance(a, b) <= tol;
}

// Point on/in the ellipsoid from a unit-ball parameter u: center + frame (lambda (.) u).
template <class K>
Vec<K> ellipsoid_point(const AxisForm<K>& f, const Vec<K>& u) {
  Vec<K> lu(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) lu[i] = K(f.lambda[i]) * u[i];
  return f.frame * lu + f.center;
}

}  // namespace extremal
