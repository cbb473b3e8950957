#include "qtherm/numkernel.hpp"

#include <limits>
#include <numeric>

namespace qtherm {

ComplexMatrix to_complex(const Matrix& a) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j);
  return c;
}

double max_imag(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z.imag()));
  return m;
}

Matrix real_part_checked(const ComplexMatrix& a, double imag_tol) {
  const double residue = max_imag(a);
  if (residue > imag_tol)
    throw consistency_error("imaginary residue " + std::to_string(residue) +
                            " exceeds tolerance");
  Matrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j).real();
  return r;
}

bool is_symmetric(const Matrix& a) {
  const double tol = 1e-13 * std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

Vector matvec(const Matrix& a, std::span<const double> v) {
  if (v.size() != a.dim()) throw precondition_error("matvec: dimension mismatch");
  Vector out(a.dim(), 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw precondition_error("dot: length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

Vector Spectrum::vector(std::size_t i) const {
  Vector v(vectors.dim());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = vectors(k, i);
  return v;
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q); accumulates into v when given.
void rotate(Matrix& a, Matrix* v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const std::size_t n = a.dim();
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const double vkp = (*v)(k, p);
      const double vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

Matrix symmetrized_copy(const Matrix& a) {
  if (!is_symmetric(a)) throw precondition_error("sym_eig: input is not symmetric");
  Matrix s = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) s(i, j) = s(j, i) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

void jacobi(Matrix& a, Matrix* v) {
  const std::size_t n = a.dim();
  const double scale = a.max_abs();
  if (scale == 0.0) return;
  const double tol = 1e-14 * static_cast<double>(n) * scale;
  // Entries at rounding level are dropped instead of rotated: inside an
  // exactly degenerate cluster they would pick arbitrary 45 degree angles
  // and keep reshuffling the off-cluster entries.
  const double floor = std::numeric_limits<double>::epsilon() * scale;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol) return;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= floor) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
  }
  throw consistency_error("sym_eig: Jacobi iteration did not converge");
}

std::vector<std::size_t> ascending_order(const Matrix& a) {
  std::vector<std::size_t> idx(a.dim());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  return idx;
}

}  // namespace

Spectrum sym_eig(const Matrix& a) {
  Matrix work = symmetrized_copy(a);
  const std::size_t n = a.dim();
  Matrix v = Matrix::identity(n);
  jacobi(work, &v);

  const auto order = ascending_order(work);
  Spectrum out{Vector(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = work(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Vector sym_eigvals(const Matrix& a) {
  Matrix work = symmetrized_copy(a);
  jacobi(work, nullptr);
  Vector vals(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) vals[k] = work(k, k);
  std::sort(vals.begin(), vals.end());
  return vals;
}

Vector singular_values(const Matrix& a) {
  Vector sv;
  if (is_symmetric(a)) {
    sv = sym_eigvals(a);
    for (auto& x : sv) x = std::abs(x);
  } else {
    sv = sym_eigvals(a.transpose() * a);
    for (auto& x : sv) x = std::sqrt(std::max(x, 0.0));
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double entropy_bits(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw precondition_error("entropy_bits: negative probability");
    total += std::max(x, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw precondition_error("entropy_bits: probabilities sum to " + std::to_string(total));
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return std::max(h, 0.0);
}

ComplexMatrix cmatmul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

}  // namespace qtherm
