#include "bdryext/forms.hpp"

#include <cmath>

#include "bdryext/extension.hpp"

namespace bdryext {

double dirichlet_energy(const DomainFunction& psi_d) {
  if (psi_d.trace_values().norm() > 1e-10)
    throw DomainError("dirichlet_energy: input has a nonzero trace");
  Complex e = grad_inner(psi_d, psi_d);
  return e.real();
}

FormValue form_value(const ComplexMatrix& U, const DomainFunction& psi,
                     double tol_one) {
  FormValue out;
  const auto& geom = psi.geometry();
  ComplexVector ghat = gamma_hat(geom, psi.trace_values());
  FormOperator op = k_u(U, tol_one);

  const ComplexMatrix P =
      ComplexMatrix::Identity(U.rows(), U.cols()) - op.Q;
  // Scale the membership test by the size of psi itself, not just the
  // trace: eigenfunctions carry O(eps) traces that must not be rejected.
  const double gnorm = ghat.norm();
  const double scale =
      std::max(gnorm, std::sqrt(std::abs(l2_inner(psi, psi).real())));
  if ((P * ghat).norm() > 1e-8 * std::max(scale, 1e-300)) {
    out.domain_ok = false;
    throw DomainError("form_value: trace of psi is outside the form domain");
  }

  out.dirichlet_part = dirichlet_energy(pi_d(psi));
  if (op.basis.cols() > 0) {
    ComplexVector gx = op.basis.adjoint() * ghat;
    Complex bt = gx.dot(op.K * gx);
    if (std::abs(bt.imag()) > 1e-10 * (1.0 + std::abs(bt)))
      throw std::runtime_error("form_value: boundary term is not real");
    out.boundary_part = bt.real();
  }
  out.total = out.dirichlet_part + out.boundary_part;
  return out;
}

double semi_green_check(const DomainFunction& phi) {
  ComplexVector g = phi.trace_values();
  ComplexVector n = phi.trace_normal();
  ComplexVector ghat = gamma_hat(phi.geometry(), g);
  ComplexVector mu = mu_from_trace(phi.geometry(), g, n);
  const Complex lhs = laplacian_inner(phi, phi);  // <phi | T* phi>
  const double energy = grad_inner(pi_d(phi), pi_d(phi)).real();
  const Complex rhs = energy - h_inner(ghat, mu);
  return std::abs(lhs - rhs);
}

}  // namespace bdryext
