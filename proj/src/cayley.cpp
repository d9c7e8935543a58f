#include "bdryext/cayley.hpp"

#include <Eigen/Eigenvalues>
#include "json.hpp"

namespace bdryext {

namespace {

ComplexMatrix complex_array_from_json(const nlohmann::json& rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr > 0 ? static_cast<int>(rows[0].size()) : 0;
  ComplexMatrix A(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      A(i, j) = Complex(rows[i][j][0].get<double>(),
                        rows[i][j][1].get<double>());
  return A;
}

nlohmann::json complex_array_to_json(const ComplexMatrix& A) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < A.cols(); ++j)
      row.push_back({A(i, j).real(), A(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

ComplexMatrix cayley(const ComplexMatrix& M) {
  const int r = static_cast<int>(M.rows());
  ComplexMatrix I = ComplexMatrix::Identity(r, r);
  // M + iI is invertible for Hermitian M.
  return (M - Complex(0, 1) * I) *
         (M + Complex(0, 1) * I).partialPivLu().solve(I);
}

ComplexMatrix inverse_cayley(const ComplexMatrix& V, double tol_one) {
  const int r = static_cast<int>(V.rows());
  if (r == 0) return ComplexMatrix(0, 0);
  ComplexMatrix I = ComplexMatrix::Identity(r, r);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(V, false);
  for (int j = 0; j < r; ++j) {
    if (std::abs(es.eigenvalues()[j] - Complex(1, 0)) <= tol_one)
      throw EigenvalueOneError(
          "inverse_cayley: eigenvalue within tol_one of 1; split off Ran P_U "
          "first");
  }
  return Complex(0, 1) * (I + V) * (I - V).partialPivLu().solve(I);
}

ComplexMatrix param_to_unitary(const SelfAdjointParam& p) {
  const int d = p.d();
  ComplexMatrix U = ComplexMatrix::Identity(d, d);
  if (p.rank() > 0) {
    ComplexMatrix V = cayley(p.M);
    U += p.basis * (V - ComplexMatrix::Identity(p.rank(), p.rank())) *
         p.basis.adjoint();
  }
  return U;
}

SelfAdjointParam unitary_to_param(const ComplexMatrix& U, double tol_one) {
  SpectralSplit split = spectral_projectors(U, tol_one);
  SelfAdjointParam p;
  p.basis = split.basis_q;
  const int r = static_cast<int>(p.basis.cols());
  if (r == 0) {
    p.M = ComplexMatrix(0, 0);
    return p;
  }
  ComplexMatrix V = p.basis.adjoint() * U * p.basis;
  ComplexMatrix M = inverse_cayley(V, tol_one);
  p.M = 0.5 * (M + M.adjoint());
  return p;
}

FormOperator k_u(const ComplexMatrix& U, double tol_one) {
  SpectralSplit split = spectral_projectors(U, tol_one);
  FormOperator out;
  out.Q = split.Q;
  out.basis = split.basis_q;
  const int r = static_cast<int>(out.basis.cols());
  if (r == 0) {
    out.K = ComplexMatrix(0, 0);
    return out;
  }
  ComplexMatrix V = out.basis.adjoint() * U * out.basis;
  // K (I-U) g = -i Q_U (I+U) g, i.e. K = -i(I+V)(I-V)^{-1} on Ran Q_U.
  ComplexMatrix K = -inverse_cayley(V, tol_one);
  out.K = 0.5 * (K + K.adjoint());
  return out;
}

SelfAdjointParam param_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SelfAdjointParam p;
  p.basis = complex_array_from_json(j.at("X_basis"));
  p.M = complex_array_from_json(j.at("M"));
  if (p.M.rows() != p.basis.cols() || p.M.cols() != p.basis.cols())
    throw std::invalid_argument("param JSON: M size does not match X_basis");
  if ((p.M - p.M.adjoint()).norm() > 1e-10 * (1.0 + p.M.norm()))
    throw std::invalid_argument("param JSON: M is not Hermitian");
  if (p.rank() > 0) {
    ComplexMatrix G = p.basis.adjoint() * p.basis;
    G -= ComplexMatrix::Identity(p.rank(), p.rank());
    if (G.norm() > 1e-8 * p.rank())
      throw std::invalid_argument("param JSON: X_basis is not orthonormal");
  }
  return p;
}

std::string param_to_json(const SelfAdjointParam& p) {
  nlohmann::json j;
  j["X_basis"] = complex_array_to_json(p.basis);
  j["M"] = complex_array_to_json(p.M);
  return j.dump();
}

}  // namespace bdryext
