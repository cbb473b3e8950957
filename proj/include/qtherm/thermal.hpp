#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qtherm/numkernel.hpp"
#include "qtherm/parallel.hpp"
#include "qtherm/qstate.hpp"

namespace qtherm {

// Energies and temperatures share units (k_B = 1).

/// Boltzmann weights exp(-(E_i - E_min)/T) / Z. Throws std::domain_error
/// for T <= 0.
Vector boltzmann_weights(std::span<const double> energies, double temperature);

/// Boltzmann weights as a function of inverse temperature; beta >= 0.
Vector boltzmann_weights_beta(std::span<const double> energies, double beta);

struct GibbsState {
  Spectrum spectrum;
  double temperature = 0.0;
  Vector weights;

  /// sum_i w_i |v_i><v_i|
  Matrix density() const;
};

GibbsState gibbs_state(Spectrum spectrum, double temperature);

/// exp(-H/T)/Z built from the spectrum of H.
DensityMatrix gibbs(const Spectrum& spectrum, double temperature, BipartiteDims dims);

/// Uniform mixture over the eigenvectors within 1e-9 of the lowest energy.
DensityMatrix ground_state(const Spectrum& spectrum, BipartiteDims dims);

/// Eigenvector indices making up the ground space (window 1e-9).
std::vector<std::size_t> ground_space(const Spectrum& spectrum);

double purity(const Matrix& rho);
double purity(const DensityMatrix& rho);

/// dP/dbeta = sum_ij 2 w_i^2 w_j (E_j - E_i).
double purity_beta_derivative(const GibbsState& g);

/// Dimensions d_1..d_m of an m-partite system, m >= 2.
struct MultipartiteDims {
  std::vector<std::size_t> parts;

  MultipartiteDims(std::initializer_list<std::size_t> p);
  explicit MultipartiteDims(std::vector<std::size_t> p);
  explicit MultipartiteDims(BipartiteDims d) : MultipartiteDims({d.a, d.b}) {}

  std::size_t total() const;
  std::size_t parties() const noexcept { return parts.size(); }
};

/// Radius of the Hilbert-Schmidt ball around I/d that holds only
/// separable states; [d(d-1)]^(-1/2) for bipartite systems.
double separable_ball_radius(const MultipartiteDims& dims);

/// Purity bound (d - 2^(2-m))^(-1); 1/(d-1) for bipartite systems.
double separable_purity_threshold(const MultipartiteDims& dims);

/// Sufficient separability test: purity <= threshold. false is inconclusive.
bool gb_separable(const Matrix& rho, const MultipartiteDims& dims);
bool gb_separable(const DensityMatrix& rho);

/// Temperature where the Gibbs purity crosses the separable-ball threshold.
/// nullopt when the state is inside the ball at every temperature (flat
/// spectrum, or a ground space so degenerate that P(T->0) <= threshold).
std::optional<double> tstar(const Spectrum& spectrum, const MultipartiteDims& dims);

using StateMeasure = std::function<double(const DensityMatrix&)>;

struct ThresholdScan {
  double t_max = 10.0;
  int grid = 400;
  double tol = 1e-9;
};

/// Largest temperature at which `measure` of the Gibbs state still exceeds
/// `scan.tol`. The grid T_k = t_max*k/grid (k = 1..grid) is scanned first,
/// then the bracket above the last entangled grid point is bisected to
/// width 1e-6. nullopt if the measure never exceeds tol on the grid.
std::optional<double> estimate_ts(const Spectrum& spectrum, BipartiteDims dims,
                                  const StateMeasure& measure, const ThresholdScan& scan = {},
                                  Execution exec = Execution::parallel);

/// -Tr(rho log2 rho)
double vn_entropy(const Matrix& rho);
double vn_entropy(const DensityMatrix& rho);

}  // namespace qtherm
