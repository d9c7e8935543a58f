#pragma once

#include <vector>

#include "bdryext/geometry.hpp"
#include "bdryext/spectral.hpp"

namespace bdryext {

/// Lowest `count` eigenvalues of the P1 finite-element discretization of
/// the quadratic form t_U on the interval: stiffness + endpoint coupling
/// through the boundary form operator, with the penalty rho * ||P_U g||^2
/// enforcing the form-domain constraint. Independent of the secular solver.
std::vector<double> fem_spectrum(const BoundaryGeometry& geom,
                                 const ComplexMatrix& U, int n, int count,
                                 double penalty = 1e8);

struct ComparisonEntry {
  double mode_value = 0.0;
  double fem_value = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  bool pass = false;
};

struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  bool pass = false;
};

/// Per-eigenvalue comparison; PASS iff each of the first `count` values
/// agrees within max(1e-3, 5e-3 * |lambda|). Multiplicities in the secular
/// result are expanded before matching.
ComparisonReport compare_spectra(const SpectrumResult& mode_result,
                                 const std::vector<double>& fem_result,
                                 int count);

}  // namespace bdryext
