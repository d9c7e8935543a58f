#include <cmath>

#include "bdryext/unitary.hpp"
#include "doctest.h"

using namespace bdryext;

TEST_CASE("spectral projectors on diagonal unitaries") {
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);

  SpectralSplit s1 = spectral_projectors(I2);
  CHECK((s1.P - I2).norm() < 1e-12);
  CHECK(s1.Q.norm() < 1e-12);

  SpectralSplit s2 = spectral_projectors(-I2);
  CHECK(s2.P.norm() < 1e-12);
  CHECK((s2.Q - I2).norm() < 1e-12);

  ComplexMatrix U = ComplexMatrix::Zero(2, 2);
  U(0, 0) = 1.0;
  U(1, 1) = Complex(0, 1);
  SpectralSplit s3 = spectral_projectors(U);
  CHECK(std::abs(s3.P(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(s3.P(1, 1)) < 1e-12);
  CHECK(std::abs(s3.Q(1, 1) - 1.0) < 1e-12);
}

TEST_CASE("projector battery over random unitaries") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int d = 2 + static_cast<int>(seed % 7);
    ComplexMatrix U = random_unitary(d, seed);
    CHECK(unitarity_defect(U) < 1e-12);
    SpectralSplit s = spectral_projectors(U);
    ComplexMatrix I = ComplexMatrix::Identity(d, d);
    CHECK((s.P + s.Q - I).norm() < 1e-10);
    CHECK((s.P * s.Q).norm() < 1e-10);
    CHECK((s.P - s.P.adjoint()).norm() < 1e-10);
    CHECK((s.P * s.P - s.P).norm() < 1e-10);
    CHECK((U * s.P - s.P * U).norm() < 1e-10);
    CHECK((U * s.Q - s.Q * U).norm() < 1e-10);

    UnitaryEigen ue = unitary_eigendecomposition(U);
    for (int j = 0; j < d; ++j)
      CHECK(std::abs(std::abs(ue.eigenvalues[j]) - 1.0) < 1e-10);
    CHECK((ue.eigenvectors.adjoint() * ue.eigenvectors - I).norm() < 1e-10);
    CHECK((U * ue.eigenvectors - ue.eigenvectors *
           ue.eigenvalues.asDiagonal().toDenseMatrix()).norm() < 1e-9);
  }
}

TEST_CASE("random_unitary determinism and d=1") {
  ComplexMatrix a = random_unitary(5, 42);
  ComplexMatrix b = random_unitary(5, 42);
  CHECK((a - b).norm() == 0.0);
  CHECK((a - random_unitary(5, 43)).norm() > 1e-3);

  ComplexMatrix s = random_unitary(1, 7);
  CHECK(std::abs(std::abs(s(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("random_hermitian is Hermitian and deterministic") {
  ComplexMatrix M = random_hermitian(6, 9);
  CHECK((M - M.adjoint()).norm() < 1e-14);
  CHECK((M - random_hermitian(6, 9)).norm() == 0.0);
}

TEST_CASE("unitary JSON round trip") {
  ComplexMatrix U = random_unitary(3, 11);
  ComplexMatrix back = unitary_from_json(unitary_to_json(U));
  CHECK((U - back).norm() < 1e-15);
  CHECK_THROWS(unitary_from_json("[[ [1,0] ],[ [0,0],[1,0] ]]"));
}
