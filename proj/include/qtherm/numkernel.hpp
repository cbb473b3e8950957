#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtherm {

/// Raised when an input violates a documented precondition
/// (wrong dimension, asymmetric matrix, unnormalized state, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check between two computational
/// routes disagrees beyond tolerance.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;
using Vector = std::vector<double>;

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }
inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }

/// Dense n x n matrix, row-major. Dimensions here never exceed a few
/// dozen, so everything is stored by value.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T{}) {
    if (n == 0) throw precondition_error("matrix dimension must be positive");
  }

  SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries)) {
    if (n == 0) throw precondition_error("matrix dimension must be positive");
    if (data_.size() != n * n) throw precondition_error("entry count must equal n*n");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    if (n_ == 0) throw precondition_error("matrix dimension must be positive");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw precondition_error("matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static SquareMatrix diagonal(std::span<const T> d) {
    SquareMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static SquareMatrix diagonal(std::initializer_list<T> d) {
    return diagonal(std::span<const T>(d.begin(), d.size()));
  }

  std::size_t dim() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const T> entries() const noexcept { return data_; }
  std::span<T> entries() noexcept { return data_; }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, magnitude(x));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose; equals transpose() for real matrices.
  SquareMatrix adjoint() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = conj_of((*this)(i, j));
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  SquareMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void require_same_dim(const SquareMatrix& o) const {
    if (o.n_ != n_)
      throw precondition_error("dimension mismatch: " + std::to_string(n_) + " vs " +
                               std::to_string(o.n_));
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Matrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<Complex>;

/// Hilbert-Schmidt (Frobenius) norm.
template <class T>
double frobenius_norm(const SquareMatrix<T>& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

ComplexMatrix to_complex(const Matrix& a);

/// Real part; throws consistency_error if any |imag| exceeds `imag_tol`.
Matrix real_part_checked(const ComplexMatrix& a, double imag_tol);

double max_imag(const ComplexMatrix& a);

/// Symmetric within 1e-13 * max(1, maxabs).
bool is_symmetric(const Matrix& a);

Vector matvec(const Matrix& a, std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

/// Eigen-decomposition of a real symmetric matrix.
/// values ascending; column i of `vectors` pairs with values[i].
struct Spectrum {
  Vector values;
  Matrix vectors;

  std::size_t size() const noexcept { return values.size(); }
  Vector vector(std::size_t i) const;
};

/// Cyclic Jacobi eigensolver. Throws precondition_error on asymmetric input.
Spectrum sym_eig(const Matrix& a);

/// Eigenvalues only; same algorithm.
Vector sym_eigvals(const Matrix& a);

/// Singular values, descending.
Vector singular_values(const Matrix& a);

/// Shannon entropy in bits. Entries in [-1e-12, 0) are clamped to zero;
/// the sum must be 1 within 1e-10.
double entropy_bits(std::span<const double> p);

/// Complex matrix product; throws precondition_error on dimension mismatch.
ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qtherm
