#pragma once

// Seeded samplers shared by the verification suites, solver restarts and
// tests. Every stream is derived from an explicit 64-bit seed so runs are
// reproducible.

#include <cmath>
#include <cstdint>
#include <random>

#include "extremal/linalg.hpp"

namespace extremal {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  std::mt19937_64& engine() { return gen_; }

  template <class K>
  K scalar() {
    if constexpr (field_traits<K>::is_complex)
      return {normal(), normal()};
    else
      return normal();
  }

  // modulus-one scalar of the field
  template <class K>
  K unit_scalar() {
    if constexpr (field_traits<K>::is_complex) {
      const double t = uniform(0.0, 2.0 * M_PI);
      return {std::cos(t), std::sin(t)};
    } else {
      return uniform() < 0.5 ? -1.0 : 1.0;
    }
  }

  template <class K>
  Vec<K> gaussian_vector(std::size_t n) {
    Vec<K> v(n);
    for (auto& x : v) x = scalar<K>();
    return v;
  }

  template <class K>
  Vec<K> unit_vector(std::size_t n) {
    Vec<K> v = gaussian_vector<K>(n);
    double nn = norm(v);
    while (nn < 1e-12) {
      v = gaussian_vector<K>(n);
      nn = norm(v);
    }
    return K(1.0 / nn) * v;
  }

  // uniform in the unit ball of K^n (real dimension n or 2n)
  template <class K>
  Vec<K> ball_point(std::size_t n) {
    const std::size_t real_dim = n * (field_traits<K>::is_complex ? 2 : 1);
    const double r = std::pow(uniform(), 1.0 / static_cast<double>(real_dim));
    return K(r) * unit_vector<K>(n);
  }

  // random Hermitian positive definite matrix with spectrum in [lo, hi]
  template <class K>
  Mat<K> hpd_matrix(std::size_t n, double lo = 0.5, double hi = 2.0) {
    Mat<K> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = scalar<K>();
    std::vector<double> spectrum(n);
    for (auto& s : spectrum) s = uniform(lo, hi);
    const EigenH<K> e = eigh(hermitian_part(adjoint(g) * g + Mat<K>::identity(n)));
    Mat<K> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        K acc{};
        for (std::size_t k = 0; k < n; ++k)
          acc += e.vectors(i, k) * K(spectrum[k]) * field_traits<K>::conj(e.vectors(j, k));
        out(i, j) = acc;
      }
    return hermitian_part(out);
  }

  // positive vector with product of coordinates equal to one
  std::vector<double> det_one_lambda(std::size_t n, double spread = 1.0) {
    std::vector<double> lam(n);
    double slog = 0.0;
    for (auto& l : lam) {
      l = spread * normal();
      slog += l;
    }
    for (auto& l : lam) l = std::exp(l - slog / static_cast<double>(n));
    return lam;
  }

  std::vector<double> dirichlet(std::size_t n) {
    std::vector<double> w(n);
    double s = 0.0;
    for (auto& x : w) {
      x = -std::log(std::max(uniform(), 1e-300));
      s += x;
    }
    for (auto& x : w) x /= s;
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace extremal
