#include <cmath>

#include "bdryext/fem.hpp"
#include "bdryext/presets.hpp"
#include "doctest.h"

using namespace bdryext;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("FEM Dirichlet on [0,pi]") {
  auto geom = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  auto vals = fem_spectrum(geom, I2, 2048, 3);
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(vals[1] == doctest::Approx(4.0).epsilon(5e-3));
  CHECK(vals[2] == doctest::Approx(9.0).epsilon(5e-3));
}

TEST_CASE("FEM Neumann on [0,pi]") {
  auto geom = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix U = preset_unitary("neumann", geom);
  auto vals = fem_spectrum(geom, U, 2048, 3);
  CHECK(std::abs(vals[0]) < 1e-6);
  CHECK(vals[1] == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(vals[2] == doctest::Approx(4.0).epsilon(5e-3));
}

TEST_CASE("FEM Krein double zero on [0,1]") {
  auto geom = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix U = preset_unitary("krein", geom);
  auto vals = fem_spectrum(geom, U, 2048, 2);
  CHECK(std::abs(vals[0]) < 1e-4);
  CHECK(std::abs(vals[1]) < 1e-4);
}

TEST_CASE("Richardson O(h^2) consistency for the first Dirichlet value") {
  auto geom = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  const double d2048 = std::abs(fem_spectrum(geom, I2, 2048, 1)[0] - 1.0);
  const double d4096 = std::abs(fem_spectrum(geom, I2, 4096, 1)[0] - 1.0);
  CHECK(d4096 <= d2048 / 3.5);
}

TEST_CASE("validation errors") {
  auto geom = BoundaryGeometry(Interval{0, 1});
  ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(fem_spectrum(geom, I2, 32, 2), std::invalid_argument);
  CHECK_THROWS_AS(fem_spectrum(geom, I2, 128, 200), std::invalid_argument);
  ComplexMatrix bad = 2.0 * I2;
  CHECK_THROWS_AS(fem_spectrum(geom, bad, 128, 2), std::invalid_argument);
  auto disk = BoundaryGeometry(Disk{1.0, 1});
  CHECK_THROWS_AS(fem_spectrum(disk, ComplexMatrix::Identity(3, 3), 128, 2),
                  std::invalid_argument);
}

TEST_CASE("compare_spectra tolerance logic") {
  SpectrumResult res;
  res.eigenvalues = {0.0, 1.0};
  res.multiplicities = {2, 1};
  res.residuals = {0, 0};
  // expanded: {0, 0, 1}
  ComparisonReport ok = compare_spectra(res, {1e-5, -2e-5, 1.0005}, 3);
  CHECK(ok.pass);
  ComparisonReport bad = compare_spectra(res, {0.0, 0.5, 1.0}, 3);
  CHECK(!bad.pass);
  CHECK_THROWS_AS(compare_spectra(res, {0.0}, 3), std::invalid_argument);
}
