#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qtherm/numkernel.hpp"
#include "qtherm/qstate.hpp"

namespace qtherm {

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const Matrix& rho, BipartiteDims dims, Subsystem side = Subsystem::B);
double negativity(const DensityMatrix& rho, Subsystem side = Subsystem::B);

/// Two-qubit concurrence. Uses the symmetric form sqrt(rho) S rho S sqrt(rho),
/// S = sigma_y (x) sigma_y, which is isospectral to rho S rho* S for real rho.
double wootters_concurrence(const DensityMatrix& rho);

/// sqrt(2 (1 - Tr rho_A^2)) for a normalized pure state.
double iconcurrence_pure(std::span<const double> psi, BipartiteDims dims);

/// sqrt(8 / (m (m-1))) * negativity, m = min(d_A, d_B).
double chen_lower_bound(const DensityMatrix& rho);
double chen_lower_bound(const Matrix& rho, BipartiteDims dims);

/// One signed entry of an antisymmetric basis vector in the doubled space
/// (H_A (x) H_B) (x) (H_A (x) H_B): `first` indexes the first copy,
/// `second` the second copy.
struct AntisymTerm {
  std::size_t first;
  std::size_t second;
  double sign;
};

/// chi = t_A (x) t_B with unnormalized t = |j>|k> - |k>|j> (j < k). Each
/// chi has exactly four nonzero entries of magnitude 1, so <chi|chi> = 4.
struct AntisymVector {
  std::array<AntisymTerm, 4> terms;
};

class AntisymBasis {
 public:
  explicit AntisymBasis(BipartiteDims dims);

  BipartiteDims dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  /// Dimension of one copy, d_A * d_B.
  std::size_t copy_dim() const noexcept { return dims_.total(); }
  const AntisymVector& operator[](std::size_t alpha) const { return vectors_[alpha]; }

  /// chi_alpha as a dense vector of length (d_A d_B)^2, index first*D + second.
  Vector dense(std::size_t alpha) const;

 private:
  BipartiteDims dims_;
  std::vector<AntisymVector> vectors_;
};

AntisymBasis build_antisym_basis(BipartiteDims dims);

/// Weights below this are dropped before building tau matrices.
inline constexpr double kRankCutoff = 1e-14;

/// T^alpha_jk = sqrt(w_j w_k) <chi_alpha| (|v_j> (x) |v_k>), for the
/// decomposition rho = sum_j w_j |v_j><v_j| (vectors as columns).
std::vector<Matrix> tau_matrices(std::span<const double> weights, const Matrix& vectors,
                                 const AntisymBasis& basis);
std::vector<Matrix> tau_matrices(const DensityMatrix& rho, const AntisymBasis& basis);

/// max(z1 - sum_{j>1} z_j, 0) for the singular values z of one tau matrix.
double tau_bound(const Matrix& tau);

/// Best single-kappa tau bound over all antisymmetric basis vectors.
double alb(std::span<const double> weights, const Matrix& vectors, const AntisymBasis& basis);
double alb(const DensityMatrix& rho);

/// sum_j w_j C(|v_j>): the I-concurrence of the eigen-decomposition.
double ub_mixture(const Spectrum& spectrum, std::span<const double> weights, BipartiteDims dims);

}  // namespace qtherm
