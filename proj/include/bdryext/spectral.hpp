#pragma once

#include <vector>

#include "bdryext/domain.hpp"
#include "bdryext/geometry.hpp"

namespace bdryext {

/// Energy-basis state: coefficients over the closed-form solutions of
/// -Delta u = lambda u on the geometry (interval: trig/affine/hyperbolic
/// pair; disk: one radial solution per angular mode).
struct ModeState {
  BoundaryGeometry geom;
  double lambda = 0.0;
  ComplexVector coeffs;
};

/// Closed-form evaluators for a mode state (traces, quadrature, forms).
DomainFunction mode_state_function(const ModeState& state);

/// Raw-coordinate boundary data (g, n) of a mode state.
std::pair<ComplexVector, ComplexVector> trace_data(const ModeState& state);

struct SpectrumResult {
  std::vector<double> eigenvalues;   // strictly increasing after merging
  std::vector<int> multiplicities;
  std::vector<double> residuals;     // smallest singular value at each root
  double window_min = 0.0;
  double window_max = 0.0;
};

/// Matrix whose near-kernel at energy lambda signals an eigenvalue of T_U:
/// column j is the boundary-condition residual of energy-basis solution j,
/// scaled by its trace-data magnitude.
ComplexMatrix secular_matrix(const BoundaryGeometry& geom,
                             const ComplexMatrix& U, double lambda);

/// Smallest singular value of the secular matrix.
double secular_sigma_min(const BoundaryGeometry& geom, const ComplexMatrix& U,
                         double lambda);

/// Locate the spectrum of T_U in (lambda_min, lambda_max): grid scan of
/// sigma_min, golden-section refinement of local minima, acceptance at
/// sigma_min <= 1e-8. lambda = 0 is probed explicitly with the polynomial
/// basis.
SpectrumResult scan_spectrum(const BoundaryGeometry& geom,
                             const ComplexMatrix& U, double lambda_min,
                             double lambda_max, int grid_points);

/// Kernel vectors of the secular matrix at an accepted root, normalized to
/// unit L^2 norm. One state per multiplicity.
std::vector<ModeState> eigenfunctions(const BoundaryGeometry& geom,
                                      const ComplexMatrix& U, double lambda);
ModeState eigenfunction(const BoundaryGeometry& geom, const ComplexMatrix& U,
                        double lambda);

}  // namespace bdryext
