#pragma once

#include "bdryext/geometry.hpp"
#include "bdryext/unitary.hpp"

namespace bdryext {

struct EigenvalueOneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grubb-style extension datum: a subspace X of the boundary space (hat
/// coordinates) and a Hermitian matrix M = Lambda L on it.
struct SelfAdjointParam {
  ComplexMatrix basis;  // d x r, orthonormal columns spanning X
  ComplexMatrix M;      // r x r Hermitian

  int d() const { return static_cast<int>(basis.rows()); }
  int rank() const { return static_cast<int>(basis.cols()); }
  ComplexMatrix projector() const { return basis * basis.adjoint(); }
};

/// V = (M - iI)(M + iI)^{-1}; unitary, never has eigenvalue 1.
ComplexMatrix cayley(const ComplexMatrix& M);

/// M = i(I + V)(I - V)^{-1}. Throws EigenvalueOneError when V has an
/// eigenvalue within tol_one of 1.
ComplexMatrix inverse_cayley(const ComplexMatrix& V,
                             double tol_one = kTolOneDefault);

/// U = cayley(M) on X, identity on the orthogonal complement.
ComplexMatrix param_to_unitary(const SelfAdjointParam& p);

/// X = Ran Q_U, M = inverse Cayley of U restricted to X.
SelfAdjointParam unitary_to_param(const ComplexMatrix& U,
                                  double tol_one = kTolOneDefault);

/// The boundary form operator of the quadratic form t_U: Hermitian K on
/// Ran Q_U (in the orthonormal basis stored alongside), satisfying
/// K (I-U) g = -i Q_U (I+U) g.
struct FormOperator {
  ComplexMatrix Q;      // d x d projector onto Ran Q_U
  ComplexMatrix basis;  // d x r orthonormal basis of Ran Q_U
  ComplexMatrix K;      // r x r Hermitian
};

FormOperator k_u(const ComplexMatrix& U, double tol_one = kTolOneDefault);

SelfAdjointParam param_from_json(const std::string& text);
std::string param_to_json(const SelfAdjointParam& p);

}  // namespace bdryext
