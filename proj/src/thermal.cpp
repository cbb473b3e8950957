#include "qtherm/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtherm {

Vector boltzmann_weights_beta(std::span<const double> energies, double beta) {
  if (energies.empty()) throw precondition_error("boltzmann_weights: empty spectrum");
  if (!(beta >= 0.0)) throw std::domain_error("boltzmann_weights: beta must be >= 0");
  const double emin = *std::min_element(energies.begin(), energies.end());
  Vector w(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-beta * (energies[i] - emin));
    z += w[i];
  }
  for (auto& x : w) x /= z;
  return w;
}

Vector boltzmann_weights(std::span<const double> energies, double temperature) {
  if (!(temperature > 0.0))
    throw std::domain_error("temperature must be positive, got " + std::to_string(temperature));
  return boltzmann_weights_beta(energies, 1.0 / temperature);
}

namespace {

Matrix mixture(const Matrix& vectors, std::span<const double> weights) {
  const std::size_t n = vectors.dim();
  Matrix rho(n);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double w = weights[k];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double wi = w * vectors(i, k);
      if (wi == 0.0) continue;
      for (std::size_t j = i; j < n; ++j) rho(i, j) += wi * vectors(j, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = rho(i, j);
  return rho;
}

double sum_of_squares(std::span<const double> w) {
  return std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
}

}  // namespace

Matrix GibbsState::density() const { return mixture(spectrum.vectors, weights); }

GibbsState gibbs_state(Spectrum spectrum, double temperature) {
  Vector w = boltzmann_weights(spectrum.values, temperature);
  return {std::move(spectrum), temperature, std::move(w)};
}

DensityMatrix gibbs(const Spectrum& spectrum, double temperature, BipartiteDims dims) {
  const Vector w = boltzmann_weights(spectrum.values, temperature);
  return DensityMatrix::trusted(mixture(spectrum.vectors, w), dims);
}

std::vector<std::size_t> ground_space(const Spectrum& spectrum) {
  const double emin = *std::min_element(spectrum.values.begin(), spectrum.values.end());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    if (spectrum.values[i] - emin <= 1e-9) idx.push_back(i);
  return idx;
}

DensityMatrix ground_state(const Spectrum& spectrum, BipartiteDims dims) {
  const auto idx = ground_space(spectrum);
  Vector w(spectrum.size(), 0.0);
  for (std::size_t i : idx) w[i] = 1.0 / static_cast<double>(idx.size());
  return DensityMatrix::trusted(mixture(spectrum.vectors, w), dims);
}

double purity(const Matrix& rho) {
  double s = 0.0;
  for (double x : rho.entries()) s += x * x;
  return s;
}

double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

double purity_beta_derivative(const GibbsState& g) {
  const auto& w = g.weights;
  const auto& e = g.spectrum.values;
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) s += 2.0 * w[i] * w[i] * w[j] * (e[j] - e[i]);
  return s;
}

MultipartiteDims::MultipartiteDims(std::initializer_list<std::size_t> p)
    : MultipartiteDims(std::vector<std::size_t>(p)) {}

MultipartiteDims::MultipartiteDims(std::vector<std::size_t> p) : parts(std::move(p)) {
  if (parts.size() < 2) throw precondition_error("at least two subsystems are required");
  for (auto d : parts)
    if (d < 2) throw precondition_error("subsystem dimensions must be >= 2");
}

std::size_t MultipartiteDims::total() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{1}, std::multiplies<>());
}

double separable_ball_radius(const MultipartiteDims& dims) {
  const double d = static_cast<double>(dims.total());
  const double m = static_cast<double>(dims.parties());
  return 1.0 / (std::pow(2.0, (m - 2.0) / 2.0) * std::sqrt(d * (d - std::pow(2.0, -(m - 2.0)))));
}

double separable_purity_threshold(const MultipartiteDims& dims) {
  const double d = static_cast<double>(dims.total());
  const double m = static_cast<double>(dims.parties());
  return 1.0 / (d - std::pow(2.0, 2.0 - m));
}

bool gb_separable(const Matrix& rho, const MultipartiteDims& dims) {
  if (rho.dim() != dims.total())
    throw precondition_error("gb_separable: dims product does not match matrix dimension");
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw precondition_error("gb_separable: Tr rho != 1");
  return purity(rho) <= separable_purity_threshold(dims);
}

bool gb_separable(const DensityMatrix& rho) {
  return gb_separable(rho.matrix(), MultipartiteDims(rho.dims()));
}

std::optional<double> tstar(const Spectrum& spectrum, const MultipartiteDims& dims) {
  if (spectrum.size() != dims.total())
    throw precondition_error("tstar: spectrum size does not match dims product");
  const auto& e = spectrum.values;
  const auto [lo_it, hi_it] = std::minmax_element(e.begin(), e.end());
  const double spread = *hi_it - *lo_it;
  if (spread <= 1e-12) return std::nullopt;

  const double threshold = separable_purity_threshold(dims);
  auto purity_at = [&](double beta) { return sum_of_squares(boltzmann_weights_beta(e, beta)); };

  // Purity rises monotonically from 1/d at beta = 0 towards 1/g (g the
  // ground degeneracy); grow beta until it passes the threshold.
  double lo = 0.0;
  double hi = 1.0 / spread;
  double p_hi = purity_at(hi);
  while (p_hi <= threshold) {
    const double next = 2.0 * hi;
    const double p_next = purity_at(next);
    if (!std::isfinite(next) || p_next == p_hi) return std::nullopt;
    lo = hi;
    hi = next;
    p_hi = p_next;
  }
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (purity_at(mid) > threshold)
      hi = mid;
    else
      lo = mid;
  }
  return 2.0 / (lo + hi);
}

std::optional<double> estimate_ts(const Spectrum& spectrum, BipartiteDims dims,
                                  const StateMeasure& measure, const ThresholdScan& scan,
                                  Execution exec) {
  if (!(scan.t_max > 0.0)) throw precondition_error("estimate_ts: t_max must be positive");
  if (scan.grid < 2) throw precondition_error("estimate_ts: grid must be >= 2");
  if (!(scan.tol > 0.0)) throw precondition_error("estimate_ts: tol must be positive");

  const std::size_t n = static_cast<std::size_t>(scan.grid);
  auto temperature = [&](std::size_t k) { return scan.t_max * static_cast<double>(k + 1) / scan.grid; };
  auto entangled = [&](double t) { return measure(gibbs(spectrum, t, dims)) > scan.tol; };

  std::vector<char> flags(n, 0);
  for_each_index(n, exec, [&](std::size_t k) { flags[k] = entangled(temperature(k)) ? 1 : 0; });

  const auto last = std::find(flags.rbegin(), flags.rend(), 1);
  if (last == flags.rend()) return std::nullopt;
  const std::size_t k = n - 1 - static_cast<std::size_t>(last - flags.rbegin());
  if (k == n - 1) return scan.t_max;

  double lo = temperature(k);
  double hi = temperature(k + 1);
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double vn_entropy(const Matrix& rho) {
  Vector ev = sym_eigvals(rho);
  for (auto& x : ev)
    if (x < 0.0 && x >= -1e-12) x = 0.0;
  return entropy_bits(ev);
}

double vn_entropy(const DensityMatrix& rho) { return vn_entropy(rho.matrix()); }

}  // namespace qtherm
