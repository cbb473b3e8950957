#pragma once

// Random inputs for property tests. Every generator takes the engine by
// reference so a test reproduces from its seed alone.

#include <algorithm>
#include <cmath>
#include <random>

#include "qtherm/numkernel.hpp"
#include "qtherm/qstate.hpp"
#include "qtherm/spinmodels.hpp"

namespace qtherm::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, double scale = 5.0) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = uniform(rng, -scale, scale);
  return a;
}

inline Matrix random_square(Rng& rng, std::size_t n, double scale = 1.0) {
  Matrix a(n);
  for (auto& x : a.entries()) x = uniform(rng, -scale, scale);
  return a;
}

inline Vector random_unit_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (auto& x : v) x = g(rng);
  const double nv = norm2(v);
  for (auto& x : v) x /= nv;
  return v;
}

// G G^T / Tr(G G^T) with G a random real n x n matrix: full rank, real.
inline Matrix random_state_matrix(Rng& rng, std::size_t n) {
  const Matrix g = random_square(rng, n);
  Matrix rho = g * g.transpose();
  rho *= 1.0 / rho.trace();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) rho(i, j) = rho(j, i);
  return rho;
}

inline DensityMatrix random_density(Rng& rng, BipartiteDims dims) {
  return DensityMatrix(random_state_matrix(rng, dims.total()), dims);
}

// Ascending random spectrum of n levels in [lo, hi].
inline Vector random_energies(Rng& rng, std::size_t n, double lo = -3.0, double hi = 3.0) {
  Vector e(n);
  for (auto& x : e) x = uniform(rng, lo, hi);
  std::sort(e.begin(), e.end());
  return e;
}

// Spectrum with random energies and random orthonormal eigenvectors.
inline Spectrum random_spectrum(Rng& rng, std::size_t n) {
  Spectrum s;
  s.values = random_energies(rng, n);
  s.vectors = sym_eig(random_symmetric(rng, n)).vectors;
  return s;
}

inline QutritChainParams random_params(Rng& rng, double range = 3.0) {
  return {uniform(rng, -range, range), uniform(rng, -range, range), uniform(rng, -range, range),
          uniform(rng, -range, range)};
}

template <class T>
double max_abs_diff(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  return (a - b).max_abs();
}

}  // namespace qtherm::testing
