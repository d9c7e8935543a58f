#include <cmath>

#include "bdryext/presets.hpp"
#include "bdryext/unitary.hpp"
#include "doctest.h"

using namespace bdryext;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("dirichlet and krein") {
  auto geom = BoundaryGeometry(Disk{1.0, 2});
  ComplexMatrix I5 = ComplexMatrix::Identity(5, 5);
  CHECK((preset_unitary("dirichlet", geom) - I5).norm() == 0.0);
  CHECK((preset_unitary("krein", geom) + I5).norm() == 0.0);
}

TEST_CASE("periodic on the interval") {
  auto geom = BoundaryGeometry(Interval{0, 2 * kPi});
  ComplexMatrix U = preset_unitary("periodic", geom);
  ComplexMatrix expect(2, 2);
  expect << 0, -1, -1, 0;
  CHECK((U - expect).norm() < 1e-12);
  CHECK_THROWS_AS(preset_unitary("periodic", BoundaryGeometry(Disk{1.0, 1})),
                  std::invalid_argument);
}

TEST_CASE("neumann eigenstructure on [0,pi]") {
  auto geom = BoundaryGeometry(Interval{0, kPi});
  ComplexMatrix U = preset_unitary("neumann", geom);
  CHECK(is_unitary(U, 1e-12));
  ComplexVector plus(2), minus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  CHECK((U * plus + plus).norm() < 1e-12);  // eigenvalue -1
  // eigenvalue C(-2/pi) = (-2/pi - i)/(-2/pi + i) = -0.42320 + 0.90604 i
  const Complex x(-2.0 / kPi, 0.0);
  const Complex w = (x - Complex(0, 1)) / (x + Complex(0, 1));
  CHECK((U * minus - w * minus).norm() < 1e-12);
  CHECK(w.real() == doctest::Approx(-0.4231988).epsilon(1e-5));
  CHECK(w.imag() == doctest::Approx(0.9060383).epsilon(1e-5));
}

TEST_CASE("robin interpolates neumann") {
  auto geom = BoundaryGeometry(Interval{0, 1});
  CHECK((preset_unitary("robin", geom, 0.0) - preset_unitary("neumann", geom))
            .norm() < 1e-14);
  ComplexMatrix U = preset_unitary("robin", geom, 2.5);
  CHECK(is_unitary(U, 1e-12));
  CHECK_THROWS_AS(preset_unitary("bogus", geom), std::invalid_argument);
}

TEST_CASE("robin on the disk uses the Sobolev weights") {
  auto geom = BoundaryGeometry(Disk{1.0, 1});
  ComplexMatrix U = preset_unitary("robin", geom, 1.0);
  CHECK(is_unitary(U, 1e-11));
  // mode 0: M = -(0 + 1) * w^2 with w = 1 -> Cayley of -1
  const Complex expect =
      (Complex(-1, 0) - Complex(0, 1)) / (Complex(-1, 0) + Complex(0, 1));
  CHECK(std::abs(U(0, 0) - expect) < 1e-12);
  // modes +-1: M = -(1 + 1) * (1 + 1)^{1/2} = -2 sqrt(2)
  const Complex m(-2.0 * std::sqrt(2.0), 0.0);
  const Complex expect1 = (m - Complex(0, 1)) / (m + Complex(0, 1));
  CHECK(std::abs(U(1, 1) - expect1) < 1e-12);
}
