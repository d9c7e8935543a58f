#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace bdryext {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Interval [a, b]; the boundary is the two endpoints.
struct Interval {
  double a = 0.0;
  double b = 1.0;
  double length() const { return b - a; }
};

/// Disk of radius R with angular modes m = -N..N kept.
struct Disk {
  double R = 1.0;
  int N = 0;
};

/// The realized geometries. Boundary coordinates live in a fixed mode
/// ordering: interval -> (a, b); disk -> m = 0, +1, -1, +2, -2, ...
class BoundaryGeometry {
 public:
  explicit BoundaryGeometry(Interval iv);
  explicit BoundaryGeometry(Disk dk);

  bool is_interval() const { return std::holds_alternative<Interval>(shape_); }
  bool is_disk() const { return std::holds_alternative<Disk>(shape_); }
  const Interval& interval() const { return std::get<Interval>(shape_); }
  const Disk& disk() const { return std::get<Disk>(shape_); }

  /// Boundary dimension: 2 for the interval, 2N+1 for the disk.
  int boundary_dim() const;

  /// Angular mode number at boundary index j (0 for the interval).
  int mode_at(int j) const;
  /// Boundary index of angular mode m.
  int index_of_mode(int m) const;

  bool operator==(const BoundaryGeometry& other) const;

 private:
  std::variant<Interval, Disk> shape_;
};

/// Laplace-Beltrami eigenvalues on the boundary, in mode order.
RealVector lb_eigenvalues(const BoundaryGeometry& geom);

/// Diagonal of Lambda_t = (I - Delta_LB)^{t/2} in mode coordinates.
RealVector sobolev_weights(const BoundaryGeometry& geom, double t);

/// Hermitian inner product of boundary coordinate vectors, antilinear in
/// the first slot. In the Lambda-orthonormal basis this is the
/// H^{-1/2}(boundary) inner product.
Complex h_inner(const ComplexVector& u, const ComplexVector& v);

/// Duality pairing <u, v>_{s,-s} on raw L^2-basis coefficients. The
/// Lambda_s and Lambda_{-s} weights cancel mode by mode.
Complex pairing(const BoundaryGeometry& geom, double s, const ComplexVector& u,
                const ComplexVector& v);

/// Raw L^2 coefficients -> hat (Lambda-orthonormal) coordinates.
ComplexVector raw_to_hat(const BoundaryGeometry& geom, const ComplexVector& g);
ComplexVector hat_to_raw(const BoundaryGeometry& geom, const ComplexVector& g);

BoundaryGeometry geometry_from_json(const std::string& text);
std::string geometry_to_json(const BoundaryGeometry& geom);

}  // namespace bdryext
