#pragma once

#include <cstddef>
#include <span>

#include "qtherm/numkernel.hpp"

namespace qtherm {

/// Local dimensions of a bipartite system. The composite basis state
/// |i>_A |k>_B has index i*b + k.
struct BipartiteDims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const noexcept { return a * b; }
  std::size_t min_local() const noexcept { return a < b ? a : b; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr BipartiteDims kTwoQutrits{3, 3};
inline constexpr BipartiteDims kTwoQubits{2, 2};

enum class Subsystem { A, B };

/// Real symmetric, unit-trace, positive semidefinite matrix with its
/// bipartite split.
class DensityMatrix {
 public:
  /// Validates symmetry, Tr = 1 +- 1e-10 and min eigenvalue >= -1e-10.
  DensityMatrix(Matrix mat, BipartiteDims dims);

  /// Skips the positivity check (eigendecomposition); used by
  /// constructors that guarantee positivity by construction.
  static DensityMatrix trusted(Matrix mat, BipartiteDims dims);

  const Matrix& matrix() const noexcept { return mat_; }
  BipartiteDims dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

 private:
  struct unchecked_tag {};
  DensityMatrix(Matrix mat, BipartiteDims dims, unchecked_tag);

  Matrix mat_;
  BipartiteDims dims_;
};

template <class T>
SquareMatrix<T> kron(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  SquareMatrix<T> out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const T aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

Vector kron(std::span<const double> u, std::span<const double> v);

/// Transposes the indices of one factor. For B:
/// out[(i,k),(j,l)] = m[(i,l),(j,k)].
Matrix partial_transpose(const Matrix& m, BipartiteDims dims, Subsystem side = Subsystem::B);
Matrix partial_transpose(const DensityMatrix& rho, Subsystem side = Subsystem::B);

/// Traces out `traced`, returning the operator on the other factor.
Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem traced);
Matrix partial_trace(const DensityMatrix& rho, Subsystem traced);

/// Reduced state of a pure vector on subsystem A.
Matrix reduced_a(std::span<const double> psi, BipartiteDims dims);

/// (1/sqrt d) sum_i |i>|i>.
Vector max_entangled(std::size_t d);

/// (|01> - |10>)/sqrt2 for two qubits.
Vector singlet();

Vector basis_vector(std::size_t n, std::size_t i);

/// |v><v|; throws precondition_error unless ||v|| = 1 +- 1e-10.
DensityMatrix dm_from_pure(std::span<const double> v, BipartiteDims dims);

}  // namespace qtherm
