#include "qtherm/spinmodels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qtherm {

namespace {

// |m1, m2> with m in {1, 0, -1} -> composite index.
constexpr std::size_t site_index(int m) { return static_cast<std::size_t>(1 - m); }
constexpr std::size_t pair_index(int m1, int m2) { return site_index(m1) * 3 + site_index(m2); }

double field_gap(const QutritChainParams& p) {
  const double d = p.B1 - p.B2;
  return std::sqrt(d * d + 4.0 * p.J * p.J);
}

Vector two_term_vector(std::size_t i, double ci, std::size_t j, double cj) {
  const double nrm2 = ci * ci + cj * cj;
  if (!(nrm2 > std::numeric_limits<double>::min()))
    throw degenerate_parameters_error("closed_form_vectors: vanishing normalizer");
  const double nrm = std::sqrt(nrm2);
  Vector v(9, 0.0);
  v[i] = ci / nrm;
  v[j] = cj / nrm;
  return v;
}

}  // namespace

Spin1Operators spin1_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  Spin1Operators ops;
  ops.sx = Matrix{{0, r, 0}, {r, 0, r}, {0, r, 0}};
  ops.sy = ComplexMatrix{{0.0, -i * r, 0.0}, {i * r, 0.0, -i * r}, {0.0, i * r, 0.0}};
  ops.sz = Matrix::diagonal({1.0, 0.0, -1.0});
  ops.sysy = real_part_checked(kron(ops.sy, ops.sy), 1e-15);
  return ops;
}

Matrix spin_dot_product() {
  const Spin1Operators ops = spin1_operators();
  return kron(ops.sx, ops.sx) + ops.sysy + kron(ops.sz, ops.sz);
}

Matrix hamiltonian_qutrit(const QutritChainParams& p) {
  static const Matrix dot = spin_dot_product();
  static const Matrix dot2 = dot * dot;
  static const Matrix z1 = kron(Matrix::diagonal({1.0, 0.0, -1.0}), Matrix::identity(3));
  static const Matrix z2 = kron(Matrix::identity(3), Matrix::diagonal({1.0, 0.0, -1.0}));
  Matrix h = p.J * dot;
  h += p.K * dot2;
  h += p.B1 * z1;
  h += p.B2 * z2;
  // D and D^2 are symmetric up to rounding in D*D; pin exact symmetry.
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = r + 1; c < 9; ++c) h(c, r) = h(r, c);
  return h;
}

ClosedFormEnergies closed_form_energies(const QutritChainParams& p) {
  const double s = field_gap(p);
  const double bsum = p.B1 + p.B2;
  return {
      p.J + bsum + p.K,
      0.5 * (bsum + 2.0 * p.K) + 0.5 * s,
      0.5 * (bsum + 2.0 * p.K) - 0.5 * s,
      -0.5 * (bsum - 2.0 * p.K) + 0.5 * s,
      -0.5 * (bsum - 2.0 * p.K) - 0.5 * s,
      p.J - bsum + p.K,
  };
}

std::array<Vector, 6> closed_form_vectors(const QutritChainParams& p) {
  const double s = field_gap(p);
  const double a = p.B1 - p.B2 + s;
  const double b = 2.0 * p.J;
  const double f = p.B2 - p.B1 + s;
  const double g = b;
  const std::size_t i10 = pair_index(1, 0), i01 = pair_index(0, 1);
  const std::size_t im0 = pair_index(-1, 0), i0m = pair_index(0, -1);
  return {
      basis_vector(9, pair_index(1, 1)),
      two_term_vector(i10, a, i01, b),
      two_term_vector(i10, b, i01, -a),
      two_term_vector(im0, f, i0m, g),
      two_term_vector(im0, g, i0m, -f),
      basis_vector(9, pair_index(-1, -1)),
  };
}

Matrix central_block(const QutritChainParams& p) {
  const Matrix h = hamiltonian_qutrit(p);
  Matrix block(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      block(r, c) = h(kCentralBlockIndices[r], kCentralBlockIndices[c]);
  return block;
}

double central_block_leakage(const Matrix& h) {
  double worst = 0.0;
  for (std::size_t r : kCentralBlockIndices)
    for (std::size_t c = 0; c < h.dim(); ++c) {
      if (std::find(kCentralBlockIndices.begin(), kCentralBlockIndices.end(), c) !=
          kCentralBlockIndices.end())
        continue;
      worst = std::max({worst, std::abs(h(r, c)), std::abs(h(c, r))});
    }
  return worst;
}

std::array<double, 3> central_block_energies(const QutritChainParams& p) {
  const Vector ev = sym_eigvals(central_block(p));
  return {ev[0], ev[1], ev[2]};
}

Matrix hamiltonian_xy(const XYParams& p) {
  // S+ = Sx + iSy with S = sigma/2 is real: |u><d|.
  const Matrix splus{{0, 1}, {0, 0}};
  const Matrix sminus = splus.transpose();
  const Matrix sz = Matrix::diagonal({0.5, -0.5});
  const Matrix id = Matrix::identity(2);
  Matrix h = p.J * (kron(splus, sminus) + kron(sminus, splus));
  h += (p.J * p.gamma) * (kron(splus, splus) + kron(sminus, sminus));
  h += p.B * (kron(sz, id) + kron(id, sz));
  return h;
}

std::array<double, 4> xy_closed_form_energies(const XYParams& p) {
  const double r = std::sqrt(p.B * p.B + p.J * p.gamma * p.J * p.gamma);
  return {p.J, -p.J, r, -r};
}

}  // namespace qtherm
