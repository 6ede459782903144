#pragma once

// Field-generic dense linear algebra for desk-scale problems (n <= 64).
// Everything here is a pure function on value types; no shared state.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

using complex_t = std::complex<double>;

template <class K>
using Vec = std::vector<K>;

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
struct field_traits;

template <>
struct field_traits<double> {
  static constexpr bool is_complex = false;
  static constexpr const char* name = "real";
  static double conj(double x) { return x; }
  static double real(double x) { return x; }
  static double imag(double) { return 0.0; }
  static double from_parts(double re, double im) {
    if (im != 0.0) throw std::invalid_argument("real scalar with nonzero imaginary part");
    return re;
  }
};

template <>
struct field_traits<complex_t> {
  static constexpr bool is_complex = true;
  static constexpr const char* name = "complex";
  static complex_t conj(complex_t x) { return std::conj(x); }
  static double real(complex_t x) { return x.real(); }
  static double imag(complex_t x) { return x.imag(); }
  static complex_t from_parts(double re, double im) { return {re, im}; }
};

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, K value = K{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<K>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

// ---------------------------------------------------------------- vectors

template <class K>
void require_same_length(const Vec<K>& x, const Vec<K>& y, const char* what) {
  if (x.size() != y.size())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
}

// Coordinatewise product x (.) y.
template <class K>
Vec<K> hadamard(const Vec<K>& x, const Vec<K>& y) {
  require_same_length(x, y, "hadamard");
  Vec<K> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

// Hermitian inner product <x, y> = sum_i x_i conj(y_i).
template <class K>
K dot_h(const Vec<K>& x, const Vec<K>& y) {
  require_same_length(x, y, "dot");
  K s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * field_traits<K>::conj(y[i]);
  return s;
}

template <class K>
double norm(const Vec<K>& x) {
  double s = 0.0;
  for (const K& v : x) s += std::norm(std::complex<double>(v));
  return std::sqrt(s);
}

template <class K>
Vec<K> operator+(const Vec<K>& x, const Vec<K>& y) {
  require_same_length(x, y, "vector add");
  Vec<K> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

template <class K>
Vec<K> operator-(const Vec<K>& x, const Vec<K>& y) {
  require_same_length(x, y, "vector sub");
  Vec<K> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

template <class K>
Vec<K> operator*(K a, const Vec<K>& x) {
  Vec<K> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
  return out;
}

inline Vec<complex_t> operator*(double a, const Vec<complex_t>& x) {
  return complex_t(a, 0.0) * x;
}

template <class K>
Vec<K> ones(std::size_t n) {
  return Vec<K>(n, K{1});
}

template <class K>
Vec<K> unit_vector(std::size_t n, std::size_t i) {
  Vec<K> e(n, K{});
  e.at(i) = K{1};
  return e;
}

template <class K>
double max_abs(const Vec<K>& x) {
  double m = 0.0;
  for (const K& v : x) m = std::max(m, std::abs(std::complex<double>(v)));
  return m;
}

// ---------------------------------------------------------------- matrices

template <class K>
Mat<K> operator+(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix add: dimension mismatch");
  Mat<K> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class K>
Mat<K> operator-(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sub: dimension mismatch");
  Mat<K> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class K>
Mat<K> operator*(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: dimension mismatch");
  Mat<K> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const K aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class K>
Mat<K> operator*(K s, const Mat<K>& a) {
  Mat<K> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

inline Mat<complex_t> operator*(double s, const Mat<complex_t>& a) {
  return complex_t(s, 0.0) * a;
}

template <class K>
Vec<K> operator*(const Mat<K>& a, const Vec<K>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  Vec<K> out(a.rows(), K{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    K s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

template <class K>
Mat<K> transpose(const Mat<K>& a) {
  Mat<K> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class K>
Mat<K> conjugate(const Mat<K>& a) {
  Mat<K> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = field_traits<K>::conj(a(i, j));
  return out;
}

template <class K>
Mat<K> adjoint(const Mat<K>& a) {
  return conjugate(transpose(a));
}

template <class K>
double max_abs(const Mat<K>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(std::complex<double>(a(i, j))));
  return m;
}

template <class K>
double frobenius(const Mat<K>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(std::complex<double>(a(i, j)));
  return std::sqrt(s);
}

template <class K>
bool is_hermitian(const Mat<K>& a, double tol = 1e-12) {
  if (!a.square()) return false;
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      const auto d = std::complex<double>(a(i, j)) -
                     std::conj(std::complex<double>(a(j, i)));
      if (std::abs(d) > tol * scale) return false;
    }
  return true;
}

// (A + A*) / 2, snapping the diagonal real.
template <class K>
Mat<K> hermitian_part(const Mat<K>& a) {
  Mat<K> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto v = 0.5 * (std::complex<double>(a(i, j)) +
                            std::conj(std::complex<double>(a(j, i))));
      out(i, j) = field_traits<K>::from_parts(v.real(), field_traits<K>::is_complex ? v.imag() : 0.0);
    }
  for (std::size_t i = 0; i < a.rows(); ++i)
    out(i, i) = field_traits<K>::from_parts(field_traits<K>::real(out(i, i)), 0.0);
  return out;
}

// The quadratic form of the shape convention used throughout: x^T A conj(x).
// Real-valued whenever A is Hermitian.
template <class K>
double quadratic_form(const Mat<K>& a, const Vec<K>& x) {
  if (!a.square() || a.rows() != x.size())
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  std::complex<double> s{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::complex<double> row{};
    for (std::size_t j = 0; j < a.cols(); ++j)
      row += std::complex<double>(a(i, j)) * std::conj(std::complex<double>(x[j]));
    s += std::complex<double>(x[i]) * row;
  }
  return s.real();
}

// ------------------------------------------------------------ factorizations

// Cholesky A = L L*, L lower with real positive diagonal. Returns false when a
// pivot drops below tol relative to the matrix scale.
template <class K>
bool try_cholesky(const Mat<K>& a, Mat<K>& lower, double tol = 1e-14) {
  if (!a.square()) return false;
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, max_abs(a));
  lower = Mat<K>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = field_traits<K>::real(a(j, j));
    for (std::size_t k = 0; k < n && k < j; ++k)
      d -= std::norm(std::complex<double>(lower(j, k)));
    if (!(d > tol * scale)) return false;
    const double ljj = std::sqrt(d);
    lower(j, j) = K{1} * K(ljj);
    for (std::size_t i = j + 1; i < n; ++i) {
      K s = a(i, j);
      for (std::size_t k = 0; k < j; ++k)
        s -= lower(i, k) * field_traits<K>::conj(lower(j, k));
      lower(i, j) = s * K(1.0 / ljj);
    }
  }
  return true;
}

template <class K>
Vec<K> solve_lower(const Mat<K>& l, Vec<K> b) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    K s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s * K(1.0 / field_traits<K>::real(l(i, i)));
  }
  return b;
}

template <class K>
Vec<K> solve_upper_adjoint(const Mat<K>& l, Vec<K> b) {
  const std::size_t n = l.rows();
  for (std::size_t ii = n; ii-- > 0;) {
    K s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k)
      s -= field_traits<K>::conj(l(k, ii)) * b[k];
    b[ii] = s * K(1.0 / field_traits<K>::real(l(ii, ii)));
  }
  return b;
}

// Solve A x = b for Hermitian positive definite A.
template <class K>
Vec<K> solve_hpd(const Mat<K>& a, const Vec<K>& b) {
  Mat<K> l;
  if (!try_cholesky(a, l)) throw std::domain_error("solve_hpd: matrix not positive definite");
  return solve_upper_adjoint(l, solve_lower(l, b));
}

template <class K>
Mat<K> inverse_hpd(const Mat<K>& a) {
  Mat<K> l;
  if (!try_cholesky(a, l)) throw std::domain_error("inverse_hpd: matrix not positive definite");
  const std::size_t n = a.rows();
  Mat<K> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<K> e(n, K{});
    e[j] = K{1};
    Vec<K> x = solve_upper_adjoint(l, solve_lower(l, e));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  return hermitian_part(inv);
}

template <class K>
double det_hpd(const Mat<K>& a) {
  Mat<K> l;
  if (!try_cholesky(a, l)) throw std::domain_error("det_hpd: matrix not positive definite");
  double d = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double lii = field_traits<K>::real(l(i, i));
    d *= lii * lii;
  }
  return d;
}

// Gauss-Jordan inverse with partial pivoting; throws on (near-)singular input.
template <class K>
Mat<K> inverse(const Mat<K>& a, double tol = 1e-12) {
  if (!a.square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Mat<K> w = a;
  Mat<K> inv = Mat<K>::identity(n);
  const double scale = std::max(1e-300, max_abs(a));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(std::complex<double>(w(col, col)));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = std::abs(std::complex<double>(w(i, col)));
      if (v > best) { best = v; piv = i; }
    }
    if (best <= tol * scale) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const K p = w(col, col);
    const K pinv = K{1} * K(1.0) / p;
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) = w(col, j) * pinv;
      inv(col, j) = inv(col, j) * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const K f = w(i, col);
      if (f == K{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Determinant over the field via LU with partial pivoting.
template <class K>
K det(const Mat<K>& a) {
  if (!a.square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  Mat<K> w = a;
  K d{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(std::complex<double>(w(col, col)));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = std::abs(std::complex<double>(w(i, col)));
      if (v > best) { best = v; piv = i; }
    }
    if (best == 0.0) return K{};
    if (piv != col) {
      d = -d;
      for (std::size_t j = col; j < n; ++j) std::swap(w(piv, j), w(col, j));
    }
    d = d * w(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const K f = w(i, col) * K(1.0) / w(col, col);
      for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return d;
}

// --------------------------------------------------------------- eigenproblem

template <class K>
struct EigenH {
  Mat<K> vectors;              // unitary, columns are eigenvectors
  std::vector<double> values;  // real, sorted descending (stable ties)
};

namespace detail {

// One two-sided rotation G* A G zeroing A(p,q). G acts on columns p,q:
//   G[p][p] = c          G[p][q] = s
//   G[q][p] = -s conj(w) G[q][q] = c conj(w)
// with w = A(p,q)/|A(p,q)| and (c, s) the classical symmetric Jacobi pair for
// the phase-stripped 2x2 block.
template <class K>
void jacobi_rotate(Mat<K>& a, Mat<K>& v, std::size_t p, std::size_t q) {
  const std::complex<double> apq(a(p, q));
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const std::complex<double> w = apq / r;
  const double app = field_traits<K>::real(a(p, p));
  const double aqq = field_traits<K>::real(a(q, q));
  const double tau = (aqq - app) / (2.0 * r);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const K kc = K(c);
  const K ks = K(s);
  const K kw = field_traits<K>::from_parts(w.real(), field_traits<K>::is_complex ? w.imag() : 0.0);
  const K kwc = field_traits<K>::conj(kw);

  const std::size_t n = a.rows();
  // columns p,q of A
  for (std::size_t i = 0; i < n; ++i) {
    const K aip = a(i, p), aiq = a(i, q);
    a(i, p) = kc * aip - ks * kwc * aiq;
    a(i, q) = ks * aip + kc * kwc * aiq;
  }
  // rows p,q of A (G* from the left)
  for (std::size_t j = 0; j < n; ++j) {
    const K apj = a(p, j), aqj = a(q, j);
    a(p, j) = kc * apj - ks * kw * aqj;
    a(q, j) = ks * apj + kc * kw * aqj;
  }
  // clean the eliminated pair and keep the diagonal real
  a(p, q) = K{};
  a(q, p) = K{};
  a(p, p) = K(field_traits<K>::real(a(p, p)));
  a(q, q) = K(field_traits<K>::real(a(q, q)));
  // accumulate eigenvectors
  for (std::size_t i = 0; i < n; ++i) {
    const K vip = v(i, p), viq = v(i, q);
    v(i, p) = kc * vip - ks * kwc * viq;
    v(i, q) = ks * vip + kc * kwc * viq;
  }
}

template <class K>
double off_diagonal_norm(const Mat<K>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      s += std::norm(std::complex<double>(a(i, j)));
  return std::sqrt(2.0 * s);
}

}  // namespace detail

// Cyclic Jacobi diagonalization of a Hermitian matrix, A = V diag(values) V*.
// Deterministic sweep order, so results are reproducible bit-for-bit.
template <class K>
EigenH<K> eigh(const Mat<K>& a_in, int max_sweeps = 100) {
  if (!a_in.square()) throw std::invalid_argument("eigh: matrix not square");
  if (!is_hermitian(a_in)) throw std::domain_error("eigh: matrix not Hermitian");
  const std::size_t n = a_in.rows();
  Mat<K> a = hermitian_part(a_in);
  Mat<K> v = Mat<K>::identity(n);

  const double total = std::max(1e-300, frobenius(a));
  int sweep = 0;
  while (detail::off_diagonal_norm(a) > 1e-15 * total) {
    if (++sweep > max_sweeps) throw convergence_error("eigh: Jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(std::complex<double>(a(p, q))) > 1e-18 * total)
          detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = field_traits<K>::real(a(i, i));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return diag[i] > diag[j]; });

  EigenH<K> out;
  out.values.resize(n);
  out.vectors = Mat<K>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = diag[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

// Positive definiteness in the sense used by all shape matrices: smallest
// eigenvalue above 1e-10 of the largest.
template <class K>
bool is_positive_definite(const Mat<K>& a, double rel_tol = 1e-10) {
  if (!a.square() || !is_hermitian(a)) return false;
  const EigenH<K> e = eigh(a);
  if (e.values.empty()) return false;
  const double top = e.values.front();
  return top > 0.0 && e.values.back() > rel_tol * top;
}

template <class K>
void require_hpd(const Mat<K>& a, const char* what, double rel_tol = 1e-10) {
  if (!a.square() || !is_hermitian(a))
    throw std::domain_error(std::string(what) + ": matrix not Hermitian");
  const EigenH<K> e = eigh(a);
  if (e.values.empty() || !(e.values.front() > 0.0) ||
      !(e.values.back() > rel_tol * e.values.front()))
    throw std::domain_error(std::string(what) + ": matrix not positive definite");
}

// The Hermitian factor B with ||B x||^2 = x^T A conj(x) for all x; equivalently
// B B = A^T. Over the reals this is the principal square root of A.
template <class K>
Mat<K> hermitian_sqrt(const Mat<K>& a) {
  if (!a.square() || !is_hermitian(a))
    throw std::domain_error("hermitian_sqrt: matrix not Hermitian");
  const EigenH<K> e = eigh(a);
  if (e.values.empty() || !(e.values.front() > 0.0) ||
      !(e.values.back() > 1e-10 * e.values.front()))
    throw std::domain_error("hermitian_sqrt: matrix not positive definite");
  const std::size_t n = a.rows();
  Mat<K> s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      K acc{};
      for (std::size_t k = 0; k < n; ++k)
        acc += e.vectors(i, k) * K(std::sqrt(e.values[k])) *
               field_traits<K>::conj(e.vectors(j, k));
      s(i, j) = acc;
    }
  return hermitian_part(conjugate(s));
}

// ---------------------------------------------------------------- realification
// C^n -> R^2n with block layout (x + i y) |-> (x, y). Multiplication by i
// becomes the complex structure J below.

inline Vec<double> realify(const Vec<complex_t>& z) {
  Vec<double> out(2 * z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = z[i].real();
    out[z.size() + i] = z[i].imag();
  }
  return out;
}

inline Vec<complex_t> complexify(const Vec<double>& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("complexify: odd dimension");
  const std::size_t n = x.size() / 2;
  Vec<complex_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {x[i], x[n + i]};
  return out;
}

// J = [[0, -I], [I, 0]]; J^2 = -I exactly.
inline Mat<double> complex_structure(std::size_t two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("complex_structure: odd dimension");
  const std::size_t n = two_n / 2;
  Mat<double> j(two_n, two_n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = -1.0;
    j(n + i, i) = 1.0;
  }
  return j;
}

// For Hermitian A = P + iQ the real form [[P, Q], [-Q, P]] satisfies
// realify(z)^T realify_form(A) realify(z) = z^T A conj(z); it commutes with J.
inline Mat<double> realify_form(const Mat<complex_t>& a) {
  if (!a.square()) throw std::invalid_argument("realify_form: matrix not square");
  const std::size_t n = a.rows();
  Mat<double> out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double p = a(i, j).real();
      const double q = a(i, j).imag();
      out(i, j) = p;
      out(n + i, n + j) = p;
      out(i, n + j) = q;
      out(n + i, j) = -q;
    }
  return out;
}

// Inverse of realify_form for J-commuting symmetric matrices.
inline Mat<complex_t> complexify_form(const Mat<double>& s, double tol = 1e-9) {
  if (!s.square() || s.rows() % 2 != 0)
    throw std::invalid_argument("complexify_form: dimension not even");
  const std::size_t n = s.rows() / 2;
  Mat<complex_t> a(n, n);
  const double scale = std::max(1.0, max_abs(s));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(s(i, j) - s(n + i, n + j)) > tol * scale ||
          std::abs(s(i, n + j) + s(n + i, j)) > tol * scale)
        throw std::domain_error("complexify_form: matrix does not commute with J");
      a(i, j) = {0.5 * (s(i, j) + s(n + i, n + j)),
                 0.5 * (s(i, n + j) - s(n + i, j))};
    }
  return hermitian_part(a);
}

}  // namespace extremal
