#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtherm/numkernel.hpp"
#include "qtherm/qstate.hpp"

namespace qtherm {

/// Displacement operators U_{x,y} = sum_j exp(2 pi i j x / d) |j+y mod d><j|,
/// returned with U_{x,y} at index x*d + y.
std::vector<ComplexMatrix> heisenberg_weyl(std::size_t d);

/// A probabilistic ensemble of (possibly complex) states of equal dimension.
struct Ensemble {
  std::vector<double> probabilities;
  std::vector<ComplexMatrix> states;

  /// Throws precondition_error unless probabilities are >= 0, sum to 1
  /// within 1e-10 and every state has the same dimension.
  void validate() const;
};

/// Entropy in bits of a Hermitian matrix, via the real symmetric embedding
/// [[Re, -Im], [Im, Re]] whose spectrum repeats each eigenvalue twice.
double hermitian_entropy_bits(const ComplexMatrix& rho);

/// S(sum p_i rho_i) - sum p_i S(rho_i).
double holevo_chi(const Ensemble& e);

/// (U (x) I) rho (U (x) I)^dagger for U acting on subsystem A.
ComplexMatrix encode_on_a(const DensityMatrix& rho, const ComplexMatrix& u);

/// Uniform average of encode_on_a over `unitaries`.
ComplexMatrix average_state(const DensityMatrix& rho, std::span<const ComplexMatrix> unitaries);

/// The d^2 equiprobable states produced by heisenberg_weyl encodings on A.
Ensemble dense_coding_ensemble(const DensityMatrix& rho);

/// log2 d + S(rho_B) - S(rho). Requires d_A == d_B.
double cdc(const DensityMatrix& rho);

enum class Direction { one_to_two, two_to_one };

/// Usefulness for dense coding: max(S(rho_2) - S(rho), 0) for 1 -> 2,
/// max(S(rho_1) - S(rho), 0) for 2 -> 1.
double udc(const DensityMatrix& rho, Direction dir);

}  // namespace qtherm
