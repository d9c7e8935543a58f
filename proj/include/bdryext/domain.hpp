#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bdryext/geometry.hpp"

namespace bdryext {

using ScalarField1D = std::function<Complex(double)>;

/// One angular component f(r) e^{i m theta} of a function on the disk.
struct DiskModeComponent {
  int m = 0;
  ScalarField1D f;    // radial profile
  ScalarField1D df;   // d/dr of the profile
  ScalarField1D lap;  // radial profile of the Laplacian of this component
};

/// A closed-form function on the closure of the domain, with evaluators for
/// values, first derivatives and the Laplacian. Disk functions are finite
/// sums of angular modes; interval functions are plain 1-D closures.
class DomainFunction {
 public:
  DomainFunction(BoundaryGeometry geom, ScalarField1D value, ScalarField1D dv,
                 ScalarField1D lap, std::string name = "");
  DomainFunction(BoundaryGeometry geom, std::vector<DiskModeComponent> modes,
                 std::string name = "");

  const BoundaryGeometry& geometry() const { return geom_; }
  const std::string& name() const { return name_; }

  /// Boundary values in the L^2(dS)-orthonormal boundary basis (raw coords).
  ComplexVector trace_values() const;
  /// Outward normal derivative in the same basis.
  ComplexVector trace_normal() const;

  DomainFunction operator-(const DomainFunction& other) const;
  DomainFunction operator+(const DomainFunction& other) const;
  DomainFunction scaled(Complex c) const;

  static DomainFunction zero(const BoundaryGeometry& geom);

  // Quadrature (interval: composite Simpson, 2048 panels; disk: 128-node
  // Gauss-Legendre radially, exact angular orthogonality).
  friend Complex l2_inner(const DomainFunction& u, const DomainFunction& v);
  friend Complex grad_inner(const DomainFunction& u, const DomainFunction& v);
  /// <u | -Delta v> by quadrature, using v's stored Laplacian.
  friend Complex laplacian_inner(const DomainFunction& u,
                                 const DomainFunction& v);

 private:
  BoundaryGeometry geom_;
  std::string name_;
  // interval representation
  ScalarField1D value_, deriv_, lap_;
  // disk representation
  std::vector<DiskModeComponent> modes_;
};

double l2_norm(const DomainFunction& u);

/// Dirichlet-to-Neumann map in raw boundary coordinates.
ComplexMatrix dtn(const BoundaryGeometry& geom);

/// Regularized normal derivative in hat coordinates:
/// mu_j = (1 + lambda_j)^{1/4} (n_j - (DtN g)_j).
ComplexVector mu_from_trace(const BoundaryGeometry& geom,
                            const ComplexVector& g_raw,
                            const ComplexVector& n_raw);

/// Trace in hat coordinates (raw -> hat reweighting).
ComplexVector gamma_hat(const BoundaryGeometry& geom, const ComplexVector& g_raw);

/// Harmonic function with prescribed raw boundary values.
DomainFunction harmonic_extension(const BoundaryGeometry& geom,
                                  const ComplexVector& g_raw);

/// psi minus the harmonic extension of its trace; the result has zero trace.
DomainFunction pi_d(const DomainFunction& psi);

/// Compiled-in corpus of closed-form functions for Green-identity and form
/// checks.
std::vector<DomainFunction> catalog_corpus(const BoundaryGeometry& geom);

// Quadrature helpers (exposed for the oracle and tests).
Complex simpson(const std::function<Complex(double)>& f, double a, double b,
                int panels = 2048);
const std::vector<std::pair<double, double>>& gauss_legendre_128();

}  // namespace bdryext
