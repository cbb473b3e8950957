#include <doctest.h>

#include <cmath>

#include "qtherm/qstate.hpp"
#include "support.hpp"

using namespace qtherm;
using qtherm::testing::Rng;

TEST_SUITE("qstate") {

TEST_CASE("kron index convention") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  CHECK(kron(Matrix::diagonal({2.0, 5.0}), Matrix::identity(2)) ==
        Matrix::diagonal({2.0, 2.0, 5.0, 5.0}));

  Rng rng(1);
  const Matrix a = qtherm::testing::random_square(rng, 2);
  const Matrix b = qtherm::testing::random_square(rng, 3);
  const Matrix ab = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) CHECK(ab(i * 3 + k, j * 3 + l) == a(i, j) * b(k, l));
  CHECK(ab.trace() == doctest::Approx(a.trace() * b.trace()).epsilon(1e-14));

  const Vector v = kron(Vector{1.0, 2.0}, Vector{3.0, 4.0, 5.0});
  CHECK(v == Vector{3.0, 4.0, 5.0, 6.0, 8.0, 10.0});
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix(Matrix::diagonal({0.5, 0.5, 0.0, 0.0}), kTwoQubits));
  CHECK_THROWS_AS(DensityMatrix(Matrix::diagonal({0.5, 0.6, 0.0, 0.0}), kTwoQubits),
                  precondition_error);
  CHECK_THROWS_AS(DensityMatrix(Matrix::diagonal({1.5, -0.5, 0.0, 0.0}), kTwoQubits),
                  precondition_error);
  CHECK_THROWS_AS(DensityMatrix(Matrix::identity(4) * 0.25, kTwoQutrits), precondition_error);
  Matrix asym = Matrix::identity(4) * 0.25;
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(asym, kTwoQubits), precondition_error);
}

TEST_CASE("partial transpose") {
  SUBCASE("product state keeps its spectrum") {
    Rng rng(2);
    const Matrix a = qtherm::testing::random_state_matrix(rng, 3);
    const Matrix b = qtherm::testing::random_state_matrix(rng, 3);
    const Matrix prod = kron(a, b);
    const Matrix pt = partial_transpose(prod, kTwoQutrits);
    CHECK(pt == kron(a, b.transpose()));
    const Vector e1 = sym_eigvals(pt), e2 = sym_eigvals(prod);
    for (std::size_t k = 0; k < 9; ++k) {
      CHECK(e1[k] == doctest::Approx(e2[k]).epsilon(1e-12));
      CHECK(e1[k] >= -1e-15);
    }
  }
  SUBCASE("singlet") {
    const Vector ev = sym_eigvals(partial_transpose(dm_from_pure(singlet(), kTwoQubits)));
    CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-15));
    for (std::size_t k = 1; k < 4; ++k) CHECK(ev[k] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("involution, trace and symmetry, both sides agree on spectrum") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const BipartiteDims dims{2 + static_cast<std::size_t>(trial % 2), 3};
      const DensityMatrix rho = qtherm::testing::random_density(rng, dims);
      const Matrix pb = partial_transpose(rho, Subsystem::B);
      const Matrix pa = partial_transpose(rho, Subsystem::A);
      CHECK(partial_transpose(pb, dims) == rho.matrix());
      CHECK(partial_transpose(pa, dims, Subsystem::A) == rho.matrix());
      CHECK(pb == pb.transpose());
      CHECK(pb.trace() == rho.matrix().trace());
      const Vector ea = sym_eigvals(pa), eb = sym_eigvals(pb);
      for (std::size_t k = 0; k < ea.size(); ++k) CHECK(std::abs(ea[k] - eb[k]) <= 1e-11);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(partial_transpose(Matrix::identity(4), kTwoQutrits), precondition_error);
  }
}

TEST_CASE("partial trace") {
  Rng rng(4);
  const BipartiteDims dims{2, 3};
  const Matrix a = qtherm::testing::random_state_matrix(rng, 2);
  const Matrix b = qtherm::testing::random_state_matrix(rng, 3);
  const Matrix prod = kron(a, b);
  CHECK(qtherm::testing::max_abs_diff(partial_trace(prod, dims, Subsystem::B), a) < 1e-15);
  CHECK(qtherm::testing::max_abs_diff(partial_trace(prod, dims, Subsystem::A), b) < 1e-15);

  // Tr_A(X (x) Y) = Tr(X) Y for non-state operators too.
  const Matrix x = qtherm::testing::random_square(rng, 2);
  const Matrix y = qtherm::testing::random_square(rng, 3);
  CHECK(qtherm::testing::max_abs_diff(partial_trace(kron(x, y), dims, Subsystem::A), x.trace() * y) <
        1e-12);

  const Matrix ra = partial_trace(dm_from_pure(max_entangled(3), kTwoQutrits), Subsystem::B);
  CHECK(qtherm::testing::max_abs_diff(ra, Matrix::identity(3) * (1.0 / 3.0)) < 1e-15);

  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = qtherm::testing::random_density(rng, kTwoQutrits);
    CHECK(std::abs(partial_trace(rho, Subsystem::A).trace() - 1.0) <= 1e-12);
    CHECK(std::abs(partial_trace(rho, Subsystem::B).trace() - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(Matrix::identity(5), dims, Subsystem::A), precondition_error);
}

TEST_CASE("canonical states") {
  const Vector me2 = max_entangled(2);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(me2 == Vector{h, 0.0, 0.0, h});

  const Vector me3 = max_entangled(3);
  for (std::size_t k = 0; k < 9; ++k)
    CHECK(me3[k] == (k == 0 || k == 4 || k == 8 ? doctest::Approx(1.0 / std::sqrt(3.0)) : doctest::Approx(0.0)));
  const Matrix ra = reduced_a(me3, kTwoQutrits);
  CHECK((ra * ra).trace() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const Vector s = singlet();
  CHECK(s == Vector{0.0, h, -h, 0.0});
  CHECK(norm2(s) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dm_from_pure") {
  const DensityMatrix e0 = dm_from_pure(basis_vector(9, 0), kTwoQutrits);
  CHECK(e0.matrix() == Matrix::diagonal({1, 0, 0, 0, 0, 0, 0, 0, 0}));

  const Matrix s = dm_from_pure(singlet(), kTwoQubits).matrix();
  CHECK(s(1, 1) == doctest::Approx(0.5));
  CHECK(s(1, 2) == doctest::Approx(-0.5));
  CHECK(s(0, 0) == 0.0);
  CHECK((s * s).trace() == doctest::Approx(1.0).epsilon(1e-14));

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = dm_from_pure(qtherm::testing::random_unit_vector(rng, 9), kTwoQutrits).matrix();
    CHECK(std::abs((m * m).trace() - 1.0) <= 1e-10);
  }
  CHECK_THROWS_AS(dm_from_pure(Vector{1.0, 1.0, 0.0, 0.0}, kTwoQubits), precondition_error);
  CHECK_THROWS_AS(dm_from_pure(basis_vector(4, 0), kTwoQutrits), precondition_error);
}

}  // TEST_SUITE
