#pragma once

#include <string>

#include "bdryext/cayley.hpp"
#include "bdryext/geometry.hpp"

namespace bdryext {

/// Named boundary unitaries in hat coordinates:
///   dirichlet -> I
///   krein     -> -I (vanishing regularized normal derivative)
///   neumann   -> robin with alpha = 0
///   robin     -> nu psi + alpha gamma psi = 0, i.e. M = -W(DtN + alpha I)W
///                with W the quarter-power Sobolev weight
///   periodic  -> interval only, X = span{(1,1)/sqrt(2)}, M = 0
ComplexMatrix preset_unitary(const std::string& name,
                             const BoundaryGeometry& geom, double alpha = 0.0);

}  // namespace bdryext
