#include "qtherm/qstate.hpp"

#include <cmath>
#include <string>

namespace qtherm {

namespace {

void require_dims(const Matrix& m, BipartiteDims dims) {
  if (dims.a < 2 || dims.b < 2) throw precondition_error("local dimensions must be >= 2");
  if (m.dim() != dims.total())
    throw precondition_error("matrix dimension " + std::to_string(m.dim()) +
                             " does not match dims product " + std::to_string(dims.total()));
}

void validate_cheap(const Matrix& m, BipartiteDims dims) {
  require_dims(m, dims);
  if (!is_symmetric(m)) throw precondition_error("density matrix is not symmetric");
  const double tr = m.trace();
  if (std::abs(tr - 1.0) > 1e-10)
    throw precondition_error("density matrix trace is " + std::to_string(tr));
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix mat, BipartiteDims dims) : mat_(std::move(mat)), dims_(dims) {
  validate_cheap(mat_, dims_);
  const Vector ev = sym_eigvals(mat_);
  if (ev.front() < -1e-10)
    throw precondition_error("density matrix has eigenvalue " + std::to_string(ev.front()));
}

DensityMatrix::DensityMatrix(Matrix mat, BipartiteDims dims, unchecked_tag)
    : mat_(std::move(mat)), dims_(dims) {
  validate_cheap(mat_, dims_);
}

DensityMatrix DensityMatrix::trusted(Matrix mat, BipartiteDims dims) {
  return DensityMatrix(std::move(mat), dims, unchecked_tag{});
}

Vector kron(std::span<const double> u, std::span<const double> v) {
  Vector out;
  out.reserve(u.size() * v.size());
  for (double x : u)
    for (double y : v) out.push_back(x * y);
  return out;
}

Matrix partial_transpose(const Matrix& m, BipartiteDims dims, Subsystem side) {
  require_dims(m, dims);
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  Matrix out(m.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          const std::size_t row = i * db + k;
          const std::size_t col = j * db + l;
          out(row, col) = side == Subsystem::B ? m(i * db + l, j * db + k)
                                               : m(j * db + k, i * db + l);
        }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, Subsystem side) {
  return partial_transpose(rho.matrix(), rho.dims(), side);
}

Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem traced) {
  require_dims(m, dims);
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  if (traced == Subsystem::B) {
    Matrix out(da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    return out;
  }
  Matrix out(db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l) {
      double s = 0.0;
      for (std::size_t i = 0; i < da; ++i) s += m(i * db + k, i * db + l);
      out(k, l) = s;
    }
  return out;
}

Matrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  return partial_trace(rho.matrix(), rho.dims(), traced);
}

Matrix reduced_a(std::span<const double> psi, BipartiteDims dims) {
  if (psi.size() != dims.total()) throw precondition_error("state length does not match dims");
  Matrix out(dims.a);
  for (std::size_t i = 0; i < dims.a; ++i)
    for (std::size_t j = i; j < dims.a; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dims.b; ++k) s += psi[i * dims.b + k] * psi[j * dims.b + k];
      out(i, j) = out(j, i) = s;
    }
  return out;
}

Vector max_entangled(std::size_t d) {
  if (d < 2) throw precondition_error("max_entangled: d must be >= 2");
  Vector v(d * d, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = amp;
  return v;
}

Vector singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  return {0.0, h, -h, 0.0};
}

Vector basis_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw precondition_error("basis_vector: index out of range");
  Vector v(n, 0.0);
  v[i] = 1.0;
  return v;
}

DensityMatrix dm_from_pure(std::span<const double> v, BipartiteDims dims) {
  if (v.size() != dims.total()) throw precondition_error("state length does not match dims");
  const double nrm = norm2(v);
  if (std::abs(nrm - 1.0) > 1e-10)
    throw precondition_error("dm_from_pure: state norm is " + std::to_string(nrm));
  Matrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
  return DensityMatrix::trusted(std::move(m), dims);
}

}  // namespace qtherm
