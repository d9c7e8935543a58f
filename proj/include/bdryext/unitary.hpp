#pragma once

#include <cstdint>

#include "bdryext/geometry.hpp"

namespace bdryext {

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kTolOneDefault = 1e-9;

/// || U^dagger U - I ||_inf-ish deviation from unitarity.
double unitarity_defect(const ComplexMatrix& U);
bool is_unitary(const ComplexMatrix& U, double tol = kUnitaryTol);

struct UnitaryEigen {
  ComplexVector eigenvalues;   // on the unit circle
  ComplexMatrix eigenvectors;  // orthonormal columns
};

/// Eigendecomposition of a (numerically) unitary matrix with orthonormal
/// eigenvectors, via the complex Schur form.
UnitaryEigen unitary_eigendecomposition(const ComplexMatrix& U);

struct SpectralSplit {
  ComplexMatrix P;  // projector onto the eigenvalue-1 cluster
  ComplexMatrix Q;  // complement, projector onto Ran(I-U) closure
  ComplexMatrix basis_p;  // orthonormal columns spanning Ran P
  ComplexMatrix basis_q;  // orthonormal columns spanning Ran Q
};

/// Split off the eigenvalue-1 subspace: P_U projects onto eigenvectors with
/// |w - 1| <= tol_one, Q_U = I - P_U.
SpectralSplit spectral_projectors(const ComplexMatrix& U,
                                  double tol_one = kTolOneDefault);

/// Haar-ish random unitary, deterministic in the seed.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

/// Random Hermitian matrix with entries O(1), deterministic in the seed.
ComplexMatrix random_hermitian(int d, std::uint64_t seed);

ComplexMatrix unitary_from_json(const std::string& text);
std::string unitary_to_json(const ComplexMatrix& U);

}  // namespace bdryext
