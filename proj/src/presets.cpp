#include "bdryext/presets.hpp"

#include <cmath>

#include "bdryext/domain.hpp"

namespace bdryext {

ComplexMatrix preset_unitary(const std::string& name,
                             const BoundaryGeometry& geom, double alpha) {
  const int d = geom.boundary_dim();
  if (name == "dirichlet") return ComplexMatrix::Identity(d, d);
  if (name == "krein") return -ComplexMatrix::Identity(d, d);
  if (name == "neumann" || name == "robin") {
    const double a = (name == "neumann") ? 0.0 : alpha;
    ComplexVector w = sobolev_weights(geom, 0.5).cast<Complex>();
    ComplexMatrix M =
        -(w.asDiagonal() *
          (dtn(geom) + a * ComplexMatrix::Identity(d, d)) * w.asDiagonal());
    SelfAdjointParam p;
    p.basis = ComplexMatrix::Identity(d, d);
    p.M = 0.5 * (M + M.adjoint());
    return param_to_unitary(p);
  }
  if (name == "periodic") {
    if (!geom.is_interval())
      throw std::invalid_argument("periodic preset: interval geometry only");
    SelfAdjointParam p;
    p.basis = ComplexMatrix(2, 1);
    p.basis << Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0));
    p.M = ComplexMatrix::Zero(1, 1);
    return param_to_unitary(p);
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace bdryext
