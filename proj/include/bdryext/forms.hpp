#pragma once

#include "bdryext/cayley.hpp"
#include "bdryext/domain.hpp"

namespace bdryext {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ||grad psi_D||^2 for a zero-trace function (checked to 1e-10).
double dirichlet_energy(const DomainFunction& psi_d);

struct FormValue {
  double total = 0.0;
  double dirichlet_part = 0.0;
  double boundary_part = 0.0;
  bool domain_ok = true;
};

/// t_U(psi) = ||grad (pi_d psi)||^2 + <gamma-hat psi | K gamma-hat psi>.
/// Throws DomainError when the trace leaves Ran Q_U.
FormValue form_value(const ComplexMatrix& U, const DomainFunction& psi,
                     double tol_one = kTolOneDefault);

/// | <phi|T* phi> - (||grad phi_D||^2 - <gamma-hat phi | mu-hat phi>) |.
double semi_green_check(const DomainFunction& phi);

}  // namespace bdryext
