#include <cmath>

#include "bdryext/extension.hpp"
#include "bdryext/presets.hpp"
#include "bdryext/spectral.hpp"
#include "doctest.h"

using namespace bdryext;

namespace {
const double kPi = 3.14159265358979323846;

bool matches(const SpectrumResult& res, const std::vector<double>& expect,
             const std::vector<int>& mult, double tol) {
  if (res.eigenvalues.size() != expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (std::abs(res.eigenvalues[i] - expect[i]) > tol) return false;
    if (res.multiplicities[i] != mult[i]) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("secular sigma_min at and away from Dirichlet eigenvalues") {
  auto geom = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  CHECK(secular_sigma_min(geom, I2, 1.0) < 1e-12);
  CHECK(secular_sigma_min(geom, I2, 4.0) < 1e-12);
  CHECK(secular_sigma_min(geom, I2, 2.5) > 1e-3);
  CHECK(secular_sigma_min(geom, I2, -3.0) > 1e-3);
}

TEST_CASE("disk Dirichlet secular root at the first J_0 zero") {
  auto geom = BoundaryGeometry(Disk{1.0, 2});
  ComplexMatrix I5 = ComplexMatrix::Identity(5, 5);
  const double j01 = 2.404825557695773;
  CHECK(secular_sigma_min(geom, I5, j01 * j01) < 1e-10);
  CHECK(secular_sigma_min(geom, I5, 4.0) > 1e-3);
  // kernel lives in mode 0
  ModeState st = eigenfunction(geom, I5, j01 * j01);
  for (int j = 1; j < 5; ++j) CHECK(std::abs(st.coeffs[j]) < 1e-8);
  CHECK(std::abs(st.coeffs[0]) > 0.1);
}

TEST_CASE("scan_spectrum on the classic presets") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  SpectrumResult dir = scan_spectrum(i0pi, I2, -1.0, 30.0, 2000);
  CHECK(matches(dir, {1, 4, 9, 16, 25}, {1, 1, 1, 1, 1}, 1e-8));
  for (double r : dir.residuals) CHECK(r <= 1e-8);

  auto i01 = BoundaryGeometry(Interval{0, 1});
  SpectrumResult krein = scan_spectrum(i01, -I2, -1.0, 1.0, 200);
  CHECK(matches(krein, {0}, {2}, 1e-10));

  auto i02pi = BoundaryGeometry(Interval{0, 2 * kPi});
  ComplexMatrix per = preset_unitary("periodic", i02pi);
  SpectrumResult ps = scan_spectrum(i02pi, per, -0.5, 5.0, 2000);
  CHECK(matches(ps, {0, 1, 4}, {1, 2, 2}, 1e-6));
}

TEST_CASE("negative spectrum: attractive Robin bound states") {
  // nu psi = 5 psi at both ends of [0,1]: two bound states near
  // lambda = -25 (kappa ~ alpha for well-separated ends)
  auto i01 = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix U = preset_unitary("robin", i01, -5.0);
  SpectrumResult res = scan_spectrum(i01, U, -50.0, 0.5, 1000);
  REQUIRE(res.eigenvalues.size() >= 2);
  CHECK(res.eigenvalues[0] < -20.0);
  CHECK(res.eigenvalues[1] < -20.0);
  // closed form: kappa with tanh(kappa/2) = 5/kappa (even) and
  // coth(kappa/2) = 5/kappa (odd); both near kappa = 5
  for (int i = 0; i < 2; ++i) {
    const double kap = std::sqrt(-res.eigenvalues[i]);
    CHECK(kap == doctest::Approx(5.0).epsilon(0.02));
  }
}

TEST_CASE("eigenfunctions: closed forms and orthogonality") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  ModeState s1 = eigenfunction(i0pi, I2, 1.0);
  DomainFunction f1 = mode_state_function(s1);
  CHECK(std::abs(l2_norm(f1) - 1.0) < 1e-9);
  // |<f1 | sin x / ||sin|| >| = 1
  for (const auto& g : catalog_corpus(i0pi)) {
    if (g.name() != "sine") continue;
    const double overlap =
        std::abs(l2_inner(f1, g)) / (l2_norm(f1) * l2_norm(g));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-9));
  }

  ModeState s2 = eigenfunction(i0pi, I2, 4.0);
  CHECK(std::abs(l2_inner(f1, mode_state_function(s2))) < 1e-6);

  ComplexMatrix Un = preset_unitary("neumann", i0pi);
  ModeState s0 = eigenfunction(i0pi, Un, 0.0);
  DomainFunction f0 = mode_state_function(s0);
  // constant function: zero Dirichlet energy
  CHECK(std::abs(grad_inner(f0, f0)) < 1e-10);

  CHECK_THROWS(eigenfunction(i0pi, I2, 2.5));
}

TEST_CASE("accepted eigenpairs satisfy the boundary condition") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  for (const char* name : {"dirichlet", "neumann", "krein"}) {
    ComplexMatrix U = preset_unitary(name, i0pi);
    SpectrumResult res = scan_spectrum(i0pi, U, -1.0, 20.0, 1500);
    for (double lam : res.eigenvalues) {
      for (const auto& st : eigenfunctions(i0pi, U, lam)) {
        auto [g, n] = trace_data(st);
        BoundaryPair p{gamma_hat(i0pi, g), mu_from_trace(i0pi, g, n)};
        CHECK(bc_residual(U, p).norm() <=
              1e-7 * (1.0 + p.g.norm() + p.u.norm()));
      }
    }
  }
}

TEST_CASE("disk scans decouple across modes for diagonal U") {
  auto geom = BoundaryGeometry(Disk{1.0, 1});
  // diagonal U: Dirichlet on mode 0, Krein on modes +-1
  ComplexMatrix U = ComplexMatrix::Identity(3, 3);
  U(1, 1) = -1.0;
  U(2, 2) = -1.0;
  SpectrumResult full = scan_spectrum(geom, U, -1.0, 9.0, 1200);
  // per-mode scalar problems assembled by hand: Dirichlet mode 0 has its
  // first root at j_{0,1}^2; Krein modes +-1 contribute lambda = 0 twice
  REQUIRE(full.eigenvalues.size() >= 2);
  CHECK(std::abs(full.eigenvalues[0]) < 1e-10);
  CHECK(full.multiplicities[0] == 2);
  const double j01 = 2.404825557695773;
  CHECK(full.eigenvalues.back() == doctest::Approx(j01 * j01).epsilon(1e-10));
}

TEST_CASE("Dirichlet dominates Krein eigenvalue-wise") {
  auto i01 = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  SpectrumResult dir = scan_spectrum(i01, I2, -1.0, 100.0, 2000);
  SpectrumResult kre = scan_spectrum(i01, -I2, -1.0, 100.0, 2000);
  std::vector<double> de, ke;
  for (std::size_t i = 0; i < dir.eigenvalues.size(); ++i)
    for (int k = 0; k < dir.multiplicities[i]; ++k)
      de.push_back(dir.eigenvalues[i]);
  for (std::size_t i = 0; i < kre.eigenvalues.size(); ++i)
    for (int k = 0; k < kre.multiplicities[i]; ++k)
      ke.push_back(kre.eigenvalues[i]);
  for (std::size_t i = 0; i < std::min(de.size(), ke.size()); ++i)
    CHECK(de[i] >= ke[i] - 1e-9);
}

TEST_CASE("scan window validation") {
  auto i01 = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(scan_spectrum(i01, I2, 2.0, 1.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(scan_spectrum(i01, I2, 0.0, 1.0, 4), std::invalid_argument);
  // empty result is valid
  SpectrumResult res = scan_spectrum(i01, I2, 200.0, 210.0, 100);
  CHECK(res.eigenvalues.empty());
}
