#include "bdryext/unitary.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <iostream>
#include "json.hpp"
#include <random>

namespace bdryext {

double unitarity_defect(const ComplexMatrix& U) {
  ComplexMatrix G = U.adjoint() * U;
  G -= ComplexMatrix::Identity(U.rows(), U.cols());
  return G.norm();
}

bool is_unitary(const ComplexMatrix& U, double tol) {
  return U.rows() == U.cols() && unitarity_defect(U) <= tol * U.rows();
}

UnitaryEigen unitary_eigendecomposition(const ComplexMatrix& U) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(U, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("unitary eigendecomposition failed");
  return UnitaryEigen{es.eigenvalues(), es.eigenvectors()};
}

SpectralSplit spectral_projectors(const ComplexMatrix& U, double tol_one) {
  const int d = static_cast<int>(U.rows());
  ComplexMatrix A = U - ComplexMatrix::Identity(d, d);
  // U - I is normal, so its singular values are |w - 1| over eigenvalues w.
  // The SVD split gives orthonormal bases of the eigenvalue-1 cluster and
  // its complement.
  Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int rank_q = 0;
  for (int j = 0; j < d; ++j) {
    if (sigma[j] > tol_one) ++rank_q;
    if (sigma[j] > 0.1 * tol_one && sigma[j] < 10.0 * tol_one) {
      std::cerr << "warning: eigenvalue of U near the tol_one boundary "
                   "(|w-1| ~ "
                << sigma[j] << ")\n";
    }
  }
  SpectralSplit out;
  out.basis_q = svd.matrixV().leftCols(rank_q);
  out.basis_p = svd.matrixV().rightCols(d - rank_q);
  out.P = out.basis_p * out.basis_p.adjoint();
  out.Q = ComplexMatrix::Identity(d, d) - out.P;
  return out;
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_unitary: d >= 1 required");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution does not depend on the QR
  // sign convention.
  for (int j = 0; j < d; ++j) {
    Complex r = R(j, j);
    Q.col(j) *= (std::abs(r) > 0) ? r / std::abs(r) : Complex(1, 0);
  }
  return Q;
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (G + G.adjoint());
}

ComplexMatrix unitary_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const auto& rows = j.is_object() ? j.at("unitary") : j;
  const int d = static_cast<int>(rows.size());
  ComplexMatrix U(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      throw std::invalid_argument("unitary JSON is not square");
    for (int k = 0; k < d; ++k) {
      U(i, k) = Complex(rows[i][k][0].get<double>(),
                        rows[i][k][1].get<double>());
    }
  }
  return U;
}

std::string unitary_to_json(const ComplexMatrix& U) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < U.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < U.cols(); ++k)
      row.push_back({U(i, k).real(), U(i, k).imag()});
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace bdryext
