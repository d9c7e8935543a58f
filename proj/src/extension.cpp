#include "bdryext/extension.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace bdryext {

BoundaryPair boundary_pair(const DomainFunction& psi) {
  const auto& geom = psi.geometry();
  ComplexVector g = psi.trace_values();
  ComplexVector n = psi.trace_normal();
  return BoundaryPair{gamma_hat(geom, g), mu_from_trace(geom, g, n)};
}

ComplexVector bc_residual(const ComplexMatrix& U, const BoundaryPair& p) {
  if (p.g.size() != U.rows() || p.u.size() != U.rows())
    throw DimensionMismatch("bc_residual: dimensions disagree");
  const Complex i(0, 1);
  return i * (p.g + U * p.g) - (p.u - U * p.u);
}

ComplexVector aim_residual(const ComplexMatrix& U, const BoundaryPair& p) {
  if (p.g.size() != U.rows() || p.u.size() != U.rows())
    throw DimensionMismatch("aim_residual: dimensions disagree");
  const Complex i(0, 1);
  return (p.u - i * p.g) - U * (p.u + i * p.g);
}

bool in_domain(const ComplexMatrix& U, const BoundaryPair& p, double tol_bc) {
  const double r = bc_residual(U, p).norm();
  return r <= tol_bc * (1.0 + p.g.norm() + p.u.norm());
}

Complex gauss_green(const BoundaryPair& p1, const BoundaryPair& p2) {
  return h_inner(p1.u, p2.g) - h_inner(p1.g, p2.u);
}

double green_identity_check(const DomainFunction& phi,
                            const DomainFunction& psi) {
  BoundaryPair p1 = boundary_pair(phi);
  BoundaryPair p2 = boundary_pair(psi);
  Complex lhs = gauss_green(p1, p2);
  Complex rhs = laplacian_inner(phi, psi) - std::conj(laplacian_inner(psi, phi));
  return std::abs(lhs - rhs);
}

IsotropySubspace wu_basis(const ComplexMatrix& U) {
  const int d = static_cast<int>(U.rows());
  const Complex i(0, 1);
  ComplexMatrix B(2 * d, d);
  B.topRows(d) = ComplexMatrix::Identity(d, d) - U;
  B.bottomRows(d) = i * (ComplexMatrix::Identity(d, d) + U);
  Eigen::JacobiSVD<ComplexMatrix> svd(B);
  const double smax = svd.singularValues()[0];
  if (svd.singularValues()[d - 1] <= 1e-12 * smax)
    throw std::runtime_error("wu_basis: numerical rank deficiency");
  return IsotropySubspace{B};
}

namespace {

Complex gamma_pairing(const ComplexVector& w1, const ComplexVector& w2) {
  const int d = static_cast<int>(w1.size()) / 2;
  BoundaryPair p1{w1.head(d), w1.tail(d)};
  BoundaryPair p2{w2.head(d), w2.tail(d)};
  return gauss_green(p1, p2);
}

}  // namespace

IsotropyReport maximal_isotropy_report(const IsotropySubspace& W) {
  IsotropyReport rep;
  const int twod = static_cast<int>(W.basis.rows());
  const int d = twod / 2;

  // Effective dimension by SVD rank.
  Eigen::JacobiSVD<ComplexMatrix> rank_svd(W.basis, Eigen::ComputeThinU);
  const double smax = rank_svd.singularValues()[0];
  int k = 0;
  for (int j = 0; j < rank_svd.singularValues().size(); ++j)
    if (rank_svd.singularValues()[j] > 1e-12 * smax) ++k;
  rep.dim = k;
  ComplexMatrix Q = rank_svd.matrixU().leftCols(k);

  rep.gamma_max_defect = 0.0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      rep.gamma_max_defect =
          std::max(rep.gamma_max_defect,
                   std::abs(gamma_pairing(Q.col(a), Q.col(b))));
  rep.isotropic = rep.gamma_max_defect <= 1e-10;

  // W-dagger: null space of the pairing matrix rows [-v2^dag, v1^dag].
  ComplexMatrix Pmat(k, twod);
  for (int a = 0; a < k; ++a) {
    Pmat.row(a).head(d) = -Q.col(a).tail(d).adjoint();
    Pmat.row(a).tail(d) = Q.col(a).head(d).adjoint();
  }
  Eigen::JacobiSVD<ComplexMatrix> null_svd(Pmat, Eigen::ComputeFullV);
  const double psmax =
      null_svd.singularValues().size() > 0 ? null_svd.singularValues()[0] : 0.0;
  int rank_p = 0;
  for (int j = 0; j < null_svd.singularValues().size(); ++j)
    if (null_svd.singularValues()[j] > 1e-10 * psmax) ++rank_p;
  ComplexMatrix Dag = null_svd.matrixV().rightCols(twod - rank_p);

  ComplexMatrix PW = Q * Q.adjoint();
  ComplexMatrix PD = Dag * Dag.adjoint();
  rep.projector_distance = (PW - PD).norm();
  rep.maximal = (rep.dim == d) && rep.projector_distance <= 1e-8;
  return rep;
}

bool maximal_isotropy_certificate(const IsotropySubspace& W) {
  IsotropyReport rep = maximal_isotropy_report(W);
  return rep.certified();
}

}  // namespace bdryext
