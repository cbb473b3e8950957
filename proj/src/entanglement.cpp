#include "qtherm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "qtherm/thermal.hpp"

namespace qtherm {

double negativity(const Matrix& rho, BipartiteDims dims, Subsystem side) {
  const Vector ev = sym_eigvals(partial_transpose(rho, dims, side));
  double s = 0.0;
  for (double x : ev)
    if (x < 0.0) s -= x;
  return s;
}

double negativity(const DensityMatrix& rho, Subsystem side) {
  return negativity(rho.matrix(), rho.dims(), side);
}

namespace {

Matrix spectral_sqrt(const Matrix& a) {
  const Spectrum s = sym_eig(a);
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::sqrt(std::max(s.values[k], 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += r * s.vectors(i, k) * s.vectors(j, k);
  }
  return out;
}

Matrix symmetrize(Matrix m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
  return m;
}

}  // namespace

double wootters_concurrence(const DensityMatrix& rho) {
  if (!(rho.dims() == kTwoQubits))
    throw precondition_error("wootters_concurrence: requires a two-qubit state");
  const Matrix yy{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  const Matrix root = spectral_sqrt(rho.matrix());
  const Matrix m = symmetrize(root * yy * rho.matrix() * yy * root);
  Vector lambdas = sym_eigvals(m);
  for (auto& x : lambdas) x = std::sqrt(std::max(x, 0.0));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::clamp(c, 0.0, 1.0);
}

double iconcurrence_pure(std::span<const double> psi, BipartiteDims dims) {
  const double nrm = norm2(psi);
  if (std::abs(nrm - 1.0) > 1e-10) throw precondition_error("iconcurrence_pure: state not normalized");
  const double p = purity(reduced_a(psi, dims));
  return std::sqrt(std::max(2.0 * (1.0 - p), 0.0));
}

double chen_lower_bound(const Matrix& rho, BipartiteDims dims) {
  const double m = static_cast<double>(dims.min_local());
  return std::sqrt(8.0 / (m * (m - 1.0))) * negativity(rho, dims);
}

double chen_lower_bound(const DensityMatrix& rho) {
  return chen_lower_bound(rho.matrix(), rho.dims());
}

AntisymBasis::AntisymBasis(BipartiteDims dims) : dims_(dims) {
  if (dims.a < 2 || dims.b < 2) throw precondition_error("AntisymBasis: dims must be >= 2");
  const std::size_t db = dims.b;
  auto pairs = [](std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j + 1 < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) out.emplace_back(j, k);
    return out;
  };
  for (const auto& [ja, ka] : pairs(dims.a))
    for (const auto& [jb, kb] : pairs(db)) {
      // t_A (x) t_B, regrouped so copy 1 holds (a1, b1) and copy 2 holds (a2, b2).
      AntisymVector chi{};
      std::size_t slot = 0;
      for (const auto& [a1, a2, sa] : {std::tuple{ja, ka, 1.0}, std::tuple{ka, ja, -1.0}})
        for (const auto& [b1, b2, sb] : {std::tuple{jb, kb, 1.0}, std::tuple{kb, jb, -1.0}})
          chi.terms[slot++] = {a1 * db + b1, a2 * db + b2, sa * sb};
      vectors_.push_back(chi);
    }
}

Vector AntisymBasis::dense(std::size_t alpha) const {
  const std::size_t d = copy_dim();
  Vector v(d * d, 0.0);
  for (const auto& t : vectors_.at(alpha).terms) v[t.first * d + t.second] += t.sign;
  return v;
}

AntisymBasis build_antisym_basis(BipartiteDims dims) { return AntisymBasis(dims); }

std::vector<Matrix> tau_matrices(std::span<const double> weights, const Matrix& vectors,
                                 const AntisymBasis& basis) {
  if (vectors.dim() != basis.copy_dim() || weights.size() != vectors.dim())
    throw precondition_error("tau_matrices: decomposition does not match basis dims");
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (weights[j] > kRankCutoff) kept.push_back(j);
  const std::size_t r = kept.size();
  if (r == 0) throw precondition_error("tau_matrices: no weight above cutoff");

  Vector sqrt_w(r);
  for (std::size_t a = 0; a < r; ++a) sqrt_w[a] = std::sqrt(weights[kept[a]]);

  std::vector<Matrix> taus;
  taus.reserve(basis.size());
  for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
    const auto& terms = basis[alpha].terms;
    Matrix t(r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a; b < r; ++b) {
        const std::size_t j = kept[a];
        const std::size_t k = kept[b];
        double overlap = 0.0;
        for (const auto& term : terms)
          overlap += term.sign * vectors(term.first, j) * vectors(term.second, k);
        t(a, b) = sqrt_w[a] * sqrt_w[b] * overlap;
      }
    // chi is invariant under exchanging the two copies, so T is symmetric.
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b) t(b, a) = t(a, b);
    taus.push_back(std::move(t));
  }
  return taus;
}

std::vector<Matrix> tau_matrices(const DensityMatrix& rho, const AntisymBasis& basis) {
  const Spectrum s = sym_eig(rho.matrix());
  return tau_matrices(s.values, s.vectors, basis);
}

double tau_bound(const Matrix& tau) {
  const Vector z = singular_values(tau);
  const double rest = std::accumulate(z.begin() + 1, z.end(), 0.0);
  return std::max(z.front() - rest, 0.0);
}

double alb(std::span<const double> weights, const Matrix& vectors, const AntisymBasis& basis) {
  double best = 0.0;
  for (const auto& t : tau_matrices(weights, vectors, basis)) best = std::max(best, tau_bound(t));
  return best;
}

double alb(const DensityMatrix& rho) {
  const Spectrum s = sym_eig(rho.matrix());
  return alb(s.values, s.vectors, AntisymBasis(rho.dims()));
}

double ub_mixture(const Spectrum& spectrum, std::span<const double> weights, BipartiteDims dims) {
  if (weights.size() != spectrum.size())
    throw precondition_error("ub_mixture: weight count does not match spectrum");
  double ub = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0.0) continue;
    ub += weights[j] * iconcurrence_pure(spectrum.vector(j), dims);
  }
  return ub;
}

}  // namespace qtherm
