#include <cmath>

#include "bdryext/domain.hpp"
#include "doctest.h"

using namespace bdryext;

namespace {
const double kPi = 3.14159265358979323846;

DomainFunction by_name(const BoundaryGeometry& geom, const std::string& n) {
  for (const auto& f : catalog_corpus(geom))
    if (f.name() == n) return f;
  throw std::runtime_error("catalog entry missing: " + n);
}
}  // namespace

TEST_CASE("dtn matrices") {
  auto i01 = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix D = dtn(i01);
  CHECK(std::abs(D(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(D(0, 1) + 1.0) < 1e-15);
  CHECK(std::abs(D(1, 0) + 1.0) < 1e-15);
  CHECK(std::abs(D(1, 1) - 1.0) < 1e-15);

  auto disk = BoundaryGeometry(Disk{1.0, 2});
  ComplexMatrix Dd = dtn(disk);
  CHECK(std::abs(Dd(disk.index_of_mode(2), disk.index_of_mode(2)) - 2.0) <
        1e-15);
  CHECK(std::abs(Dd(0, 0)) < 1e-15);
  // Hermitian PSD with constants in the kernel
  CHECK((D - D.adjoint()).norm() < 1e-14);
  ComplexVector ones = ComplexVector::Ones(2);
  CHECK((D * ones).norm() < 1e-14);
  CHECK((Dd * ComplexVector::Unit(5, 0)).norm() < 1e-15);
}

TEST_CASE("trace data of catalog functions") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  DomainFunction sine = by_name(i0pi, "sine");
  ComplexVector g = sine.trace_values(), n = sine.trace_normal();
  CHECK(std::abs(g[0]) < 1e-14);
  CHECK(std::abs(g[1]) < 1e-12);
  CHECK(std::abs(n[0] + 1.0) < 1e-14);  // -d/dx at a
  CHECK(std::abs(n[1] + 1.0) < 1e-12);  // +d/dx at b, sin'(pi) = -1

  auto i01 = BoundaryGeometry(Interval{0, 1});
  DomainFunction lin = by_name(i01, "linear");
  CHECK(std::abs(lin.trace_values()[0]) < 1e-15);
  CHECK(std::abs(lin.trace_values()[1] - 1.0) < 1e-15);
  CHECK(std::abs(lin.trace_normal()[0] + 1.0) < 1e-15);
  CHECK(std::abs(lin.trace_normal()[1] - 1.0) < 1e-15);
}

TEST_CASE("disk trace carries the dS-orthonormal factor sqrt(2 pi R)") {
  // psi = r e^{i theta} has boundary value e^{i theta} = sqrt(2 pi R) times
  // the L^2(dS)-orthonormal basis function, so the raw coefficient at mode 1
  // is sqrt(2 pi R) (not 1; the basis is normalized against dS).
  auto disk = BoundaryGeometry(Disk{1.0, 2});
  DomainFunction h = by_name(disk, "m1_harmonic");
  const int j = disk.index_of_mode(1);
  const double s = std::sqrt(2.0 * kPi);
  ComplexVector g = h.trace_values(), n = h.trace_normal();
  CHECK(std::abs(g[j] - s) < 1e-13);
  CHECK(std::abs(n[j] - s) < 1e-13);
  for (int i = 0; i < 5; ++i) {
    if (i == j) continue;
    CHECK(std::abs(g[i]) < 1e-15);
    CHECK(std::abs(n[i]) < 1e-15);
  }
}

TEST_CASE("mu_from_trace") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  DomainFunction sine = by_name(i0pi, "sine");
  ComplexVector mu =
      mu_from_trace(i0pi, sine.trace_values(), sine.trace_normal());
  CHECK(std::abs(mu[0] + 1.0) < 1e-12);
  CHECK(std::abs(mu[1] + 1.0) < 1e-12);

  // harmonic inputs are annihilated, both geometries
  for (const char* nm : {"one", "linear"}) {
    DomainFunction f = by_name(BoundaryGeometry(Interval{0.5, 2.5}), nm);
    CHECK(mu_from_trace(f.geometry(), f.trace_values(), f.trace_normal())
              .norm() < 1e-12);
  }
  auto disk = BoundaryGeometry(Disk{1.5, 2});
  for (const char* nm : {"one", "m1_harmonic", "m-1_harmonic", "m2_harmonic"}) {
    DomainFunction f = by_name(disk, nm);
    CHECK(mu_from_trace(disk, f.trace_values(), f.trace_normal()).norm() <
          1e-12);
  }
  CHECK_THROWS_AS(
      mu_from_trace(i0pi, ComplexVector::Zero(3), ComplexVector::Zero(3)),
      DimensionMismatch);
}

TEST_CASE("gamma_hat weights") {
  auto disk = BoundaryGeometry(Disk{1.0, 1});
  ComplexVector e = ComplexVector::Unit(3, disk.index_of_mode(1));
  CHECK(std::abs(gamma_hat(disk, e)[disk.index_of_mode(1)] -
                 std::pow(2.0, -0.25)) < 1e-14);
  auto ival = BoundaryGeometry(Interval{0, 2});
  ComplexVector g(2);
  g << 1.0, 0.0;
  CHECK((gamma_hat(ival, g) - g).norm() == 0.0);
}

TEST_CASE("harmonic extension") {
  auto i01 = BoundaryGeometry(Interval{0, 1});
  ComplexVector g(2);
  g << 0.0, 1.0;
  DomainFunction h = harmonic_extension(i01, g);
  // reproduces the trace exactly and is annihilated by mu
  CHECK((h.trace_values() - g).norm() < 1e-14);
  CHECK(mu_from_trace(i01, h.trace_values(), h.trace_normal()).norm() < 1e-13);
  // equals x: compare against the catalog entry in L^2
  DomainFunction lin = by_name(i01, "linear");
  CHECK(l2_norm(h - lin) < 1e-12);

  auto disk = BoundaryGeometry(Disk{2.0, 2});
  ComplexVector gd(5);
  for (int j = 0; j < 5; ++j) gd[j] = Complex(0.3 * j - 0.2, 0.1 * j);
  DomainFunction hd = harmonic_extension(disk, gd);
  CHECK((hd.trace_values() - gd).norm() < 1e-12);
  CHECK(mu_from_trace(disk, hd.trace_values(), hd.trace_normal()).norm() <
        1e-12);
}

TEST_CASE("pi_d is a projection with zero-trace range") {
  for (const auto& geom :
       {BoundaryGeometry(Interval{0, kPi}), BoundaryGeometry(Disk{1.0, 2})}) {
    for (const auto& f : catalog_corpus(geom)) {
      DomainFunction p = pi_d(f);
      CHECK(p.trace_values().norm() < 1e-12);
      DomainFunction pp = pi_d(p);
      CHECK(l2_norm(pp - p) < 1e-10);
    }
  }
  // psi = sin x + x on [0, pi]: the harmonic part is exactly x
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  DomainFunction spl = by_name(i0pi, "sine_plus_linear");
  CHECK(l2_norm(pi_d(spl) - by_name(i0pi, "sine")) < 1e-10);
  // harmonic functions project to zero
  CHECK(l2_norm(pi_d(by_name(i0pi, "linear"))) < 1e-12);
}

TEST_CASE("quadrature inner products") {
  auto i0pi = BoundaryGeometry(Interval{0, kPi});
  DomainFunction sine = by_name(i0pi, "sine");
  CHECK(std::abs(l2_inner(sine, sine).real() - kPi / 2) < 1e-10);
  CHECK(std::abs(grad_inner(sine, sine).real() - kPi / 2) < 1e-10);
  // <u | -Delta v> with v = sin: equals lambda <u|v> with lambda = 1
  CHECK(std::abs(laplacian_inner(sine, sine) - l2_inner(sine, sine)) < 1e-10);

  // disk: paraboloid 1 - r^2 on the unit disk, ||.||^2 = pi/3
  auto disk = BoundaryGeometry(Disk{1.0, 1});
  DomainFunction par = by_name(disk, "paraboloid");
  CHECK(std::abs(l2_inner(par, par).real() - kPi / 3) < 1e-10);
  // -Delta (1 - r^2) = 4, so <1|-Delta par> = 4 * area = 4 pi
  DomainFunction one = by_name(disk, "one");
  CHECK(std::abs(laplacian_inner(one, par).real() - 4 * kPi) < 1e-9);

  // simpson sanity
  Complex s = simpson([](double x) { return Complex(std::sin(x)); }, 0, kPi);
  CHECK(std::abs(s - Complex(2, 0)) < 1e-12);
  double wsum = 0;
  for (auto [x, w] : gauss_legendre_128()) wsum += w;
  CHECK(std::abs(wsum - 2.0) < 1e-13);
}

TEST_CASE("mode orthogonality on the disk") {
  auto disk = BoundaryGeometry(Disk{1.0, 2});
  DomainFunction m1 = by_name(disk, "m1_harmonic");
  DomainFunction m2 = by_name(disk, "m2_harmonic");
  CHECK(std::abs(l2_inner(m1, m2)) < 1e-14);
  CHECK(std::abs(grad_inner(m1, m2)) < 1e-14);
}
