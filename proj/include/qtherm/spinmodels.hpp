#pragma once

#include <array>
#include <stdexcept>

#include "qtherm/numkernel.hpp"
#include "qtherm/qstate.hpp"

namespace qtherm {

/// Couplings and site fields of the two-site spin-1 chain
///   H = J (S1.S2) + K (S1.S2)^2 + B1 S1z + B2 S2z.
struct QutritChainParams {
  double J = -1.0;
  double K = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;
};

/// Two-qubit anisotropic XY chain in a uniform field.
struct XYParams {
  double J = 1.0;
  double gamma = 0.0;
  double B = 0.0;
};

/// Thrown when a closed-form eigenvector has a vanishing normalizer.
class degenerate_parameters_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Spin-1 matrices in the basis |1>, |0>, |-1> (indices 0, 1, 2).
struct Spin1Operators {
  Matrix sx;
  ComplexMatrix sy;
  Matrix sz;
  /// Sy (x) Sy, real after the imaginary parts cancel.
  Matrix sysy;
};

Spin1Operators spin1_operators();

/// S1.S2 on the 9-dim two-site space.
Matrix spin_dot_product();

Matrix hamiltonian_qutrit(const QutritChainParams& p);

/// Energies with closed forms: E1, E2, E3, E7, E8, E9 in that order.
struct ClosedFormEnergies {
  double e1, e2, e3, e7, e8, e9;

  std::array<double, 6> as_array() const { return {e1, e2, e3, e7, e8, e9}; }
};

ClosedFormEnergies closed_form_energies(const QutritChainParams& p);

/// Eigenvectors paired with closed_form_energies (Phi1, Phi2, Phi3, Phi7,
/// Phi8, Phi9). Throws degenerate_parameters_error if a normalizer vanishes.
std::array<Vector, 6> closed_form_vectors(const QutritChainParams& p);

/// Composite indices of |00>, |1,-1>, |-1,1>: the zero-magnetization
/// sector holding E4, E5, E6.
inline constexpr std::array<std::size_t, 3> kCentralBlockIndices{4, 2, 6};

/// H restricted to span{|00>, |1,-1>, |-1,1>} in that order.
Matrix central_block(const QutritChainParams& p);

/// Largest |H(i,j)| with i in the central block and j outside it.
double central_block_leakage(const Matrix& h);

/// Central-block eigenvalues E4 <= E5 <= E6.
std::array<double, 3> central_block_energies(const QutritChainParams& p);

/// Basis |uu>, |ud>, |du>, |dd> with spin-up at index 0.
Matrix hamiltonian_xy(const XYParams& p);

/// {J, -J, sqrt(B^2 + (J gamma)^2), -sqrt(B^2 + (J gamma)^2)} as E1..E4.
std::array<double, 4> xy_closed_form_energies(const XYParams& p);

}  // namespace qtherm
