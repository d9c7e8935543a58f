#pragma once

#include "bdryext/domain.hpp"
#include "bdryext/geometry.hpp"

namespace bdryext {

inline constexpr double kTolBcDefault = 1e-9;

/// The pair (gamma psi, mu psi) in hat coordinates.
struct BoundaryPair {
  ComplexVector g;  // trace
  ComplexVector u;  // regularized normal derivative
};

/// Boundary data of a closed-form function, in hat coordinates.
BoundaryPair boundary_pair(const DomainFunction& psi);

/// r = i(I+U) g - (I-U) u; zero iff psi lies in D(T_U).
ComplexVector bc_residual(const ComplexMatrix& U, const BoundaryPair& p);

/// (u - i g) - U (u + i g); equals -bc_residual identically.
ComplexVector aim_residual(const ComplexMatrix& U, const BoundaryPair& p);

/// Certified membership predicate for D(T_U).
bool in_domain(const ComplexMatrix& U, const BoundaryPair& p,
               double tol_bc = kTolBcDefault);

/// Gauss-Green boundary form Gamma = <u1|g2> - <g1|u2>.
Complex gauss_green(const BoundaryPair& p1, const BoundaryPair& p2);

/// |Gamma(phi, psi) - (<phi|T* psi> - <T* phi|psi>)| with volume terms by
/// quadrature.
double green_identity_check(const DomainFunction& phi,
                            const DomainFunction& psi);

/// A subspace of the doubled boundary space, columns = (g; u) stacked.
struct IsotropySubspace {
  ComplexMatrix basis;  // 2d x k
};

/// The graph subspace W of the boundary condition: columns
/// ((I-U) h_j ; i (I+U) h_j). Always rank d.
IsotropySubspace wu_basis(const ComplexMatrix& U);

struct IsotropyReport {
  bool isotropic = false;        // Gamma vanishes on W x W
  bool maximal = false;          // dim W = d and W-dagger = W
  int dim = 0;
  double gamma_max_defect = 0.0; // max |Gamma| over orthonormalized basis pairs
  double projector_distance = 0.0;
  bool certified() const { return isotropic && maximal; }
};

IsotropyReport maximal_isotropy_report(const IsotropySubspace& W);
bool maximal_isotropy_certificate(const IsotropySubspace& W);

}  // namespace bdryext
