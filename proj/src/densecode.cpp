#include "qtherm/densecode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qtherm/thermal.hpp"

namespace qtherm {

std::vector<ComplexMatrix> heisenberg_weyl(std::size_t d) {
  if (d < 2) throw precondition_error("heisenberg_weyl: d must be >= 2");
  std::vector<ComplexMatrix> ops;
  ops.reserve(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      ComplexMatrix u(d);
      for (std::size_t j = 0; j < d; ++j) {
        // Reduce j*x mod d first so the phase argument stays in [0, 2 pi).
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * x) % d) / d;
        u((j + y) % d, j) = std::polar(1.0, angle);
      }
      ops.push_back(std::move(u));
    }
  return ops;
}

void Ensemble::validate() const {
  if (probabilities.empty() || probabilities.size() != states.size())
    throw precondition_error("ensemble: probabilities and states must pair up");
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw precondition_error("ensemble: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw precondition_error("ensemble: probabilities do not sum to 1");
  for (const auto& s : states)
    if (s.dim() != states.front().dim()) throw precondition_error("ensemble: state dimensions differ");
}

double hermitian_entropy_bits(const ComplexMatrix& rho) {
  const std::size_t n = rho.dim();
  Matrix embed(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Hermitize against rounding: use (rho + rho^dagger)/2.
      const Complex z = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      embed(i, j) = embed(n + i, n + j) = z.real();
      embed(n + i, j) = z.imag();
      embed(i, n + j) = -z.imag();
    }
  const Vector ev = sym_eigvals(embed);
  Vector p(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = 0.5 * (ev[2 * k] + ev[2 * k + 1]);
    p[k] = (x < 0.0 && x >= -1e-12) ? 0.0 : x;
  }
  return entropy_bits(p);
}

double holevo_chi(const Ensemble& e) {
  e.validate();
  const std::size_t n = e.states.front().dim();
  ComplexMatrix mean(n);
  double average_entropy = 0.0;
  for (std::size_t i = 0; i < e.states.size(); ++i) {
    if (e.probabilities[i] == 0.0) continue;
    mean += Complex(e.probabilities[i]) * e.states[i];
    average_entropy += e.probabilities[i] * hermitian_entropy_bits(e.states[i]);
  }
  return hermitian_entropy_bits(mean) - average_entropy;
}

ComplexMatrix encode_on_a(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.dim() != rho.dims().a) throw precondition_error("encode_on_a: unitary does not act on A");
  const ComplexMatrix full = kron(u, ComplexMatrix::identity(rho.dims().b));
  return full * to_complex(rho.matrix()) * full.adjoint();
}

ComplexMatrix average_state(const DensityMatrix& rho, std::span<const ComplexMatrix> unitaries) {
  if (unitaries.empty()) throw precondition_error("average_state: no unitaries");
  ComplexMatrix mean(rho.dim());
  const Complex weight(1.0 / static_cast<double>(unitaries.size()));
  for (const auto& u : unitaries) mean += weight * encode_on_a(rho, u);
  return mean;
}

Ensemble dense_coding_ensemble(const DensityMatrix& rho) {
  const std::size_t d = rho.dims().a;
  const auto ops = heisenberg_weyl(d);
  Ensemble e;
  e.probabilities.assign(ops.size(), 1.0 / static_cast<double>(ops.size()));
  e.states.reserve(ops.size());
  for (const auto& u : ops) e.states.push_back(encode_on_a(rho, u));
  return e;
}

double cdc(const DensityMatrix& rho) {
  const auto dims = rho.dims();
  if (dims.a != dims.b)
    throw precondition_error("cdc: requires equal local dimensions, got " + std::to_string(dims.a) +
                             "x" + std::to_string(dims.b));
  const double s_b = vn_entropy(partial_trace(rho, Subsystem::A));
  return std::log2(static_cast<double>(dims.a)) + s_b - vn_entropy(rho);
}

double udc(const DensityMatrix& rho, Direction dir) {
  // The receiver keeps the untouched half: rho_2 for 1 -> 2.
  const Subsystem traced = dir == Direction::one_to_two ? Subsystem::A : Subsystem::B;
  const double s_local = vn_entropy(partial_trace(rho, traced));
  return std::max(s_local - vn_entropy(rho), 0.0);
}

}  // namespace qtherm
