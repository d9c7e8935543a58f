#include "bdryext/geometry.hpp"

#include <cmath>
#include "json.hpp"

namespace bdryext {

BoundaryGeometry::BoundaryGeometry(Interval iv) : shape_(iv) {
  if (!(iv.a < iv.b)) throw std::invalid_argument("interval requires a < b");
}

BoundaryGeometry::BoundaryGeometry(Disk dk) : shape_(dk) {
  if (!(dk.R > 0.0)) throw std::invalid_argument("disk requires R > 0");
  if (dk.N < 0) throw std::invalid_argument("disk requires N >= 0");
}

int BoundaryGeometry::boundary_dim() const {
  return is_interval() ? 2 : 2 * disk().N + 1;
}

int BoundaryGeometry::mode_at(int j) const {
  if (is_interval()) return 0;
  if (j == 0) return 0;
  // ordering 0, +1, -1, +2, -2, ...
  int m = (j + 1) / 2;
  return (j % 2 == 1) ? m : -m;
}

int BoundaryGeometry::index_of_mode(int m) const {
  if (is_interval()) return 0;
  if (m == 0) return 0;
  return m > 0 ? 2 * m - 1 : -2 * m;
}

bool BoundaryGeometry::operator==(const BoundaryGeometry& other) const {
  if (is_interval() != other.is_interval()) return false;
  if (is_interval()) {
    return interval().a == other.interval().a &&
           interval().b == other.interval().b;
  }
  return disk().R == other.disk().R && disk().N == other.disk().N;
}

RealVector lb_eigenvalues(const BoundaryGeometry& geom) {
  const int d = geom.boundary_dim();
  RealVector lam(d);
  if (geom.is_interval()) {
    lam.setZero();
    return lam;
  }
  const double R = geom.disk().R;
  for (int j = 0; j < d; ++j) {
    const double m = geom.mode_at(j);
    lam[j] = m * m / (R * R);
  }
  return lam;
}

RealVector sobolev_weights(const BoundaryGeometry& geom, double t) {
  RealVector lam = lb_eigenvalues(geom);
  RealVector w(lam.size());
  for (int j = 0; j < lam.size(); ++j) w[j] = std::pow(1.0 + lam[j], t / 2.0);
  return w;
}

Complex h_inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("h_inner: vector lengths differ");
  return u.dot(v);  // Eigen's dot conjugates the first argument
}

Complex pairing(const BoundaryGeometry& geom, double s, const ComplexVector& u,
                const ComplexVector& v) {
  if (u.size() != v.size() || u.size() != geom.boundary_dim())
    throw DimensionMismatch("pairing: vector lengths differ");
  RealVector wp = sobolev_weights(geom, s);
  RealVector wm = sobolev_weights(geom, -s);
  Complex acc = 0.0;
  for (int j = 0; j < u.size(); ++j)
    acc += std::conj(wp[j] * u[j]) * (wm[j] * v[j]);
  return acc;
}

ComplexVector raw_to_hat(const BoundaryGeometry& geom, const ComplexVector& g) {
  if (g.size() != geom.boundary_dim())
    throw DimensionMismatch("raw_to_hat: bad length");
  RealVector w = sobolev_weights(geom, -0.5);  // (1+lambda)^{-1/4}
  ComplexVector out(g.size());
  for (int j = 0; j < g.size(); ++j) out[j] = w[j] * g[j];
  return out;
}

ComplexVector hat_to_raw(const BoundaryGeometry& geom, const ComplexVector& g) {
  if (g.size() != geom.boundary_dim())
    throw DimensionMismatch("hat_to_raw: bad length");
  RealVector w = sobolev_weights(geom, 0.5);
  ComplexVector out(g.size());
  for (int j = 0; j < g.size(); ++j) out[j] = w[j] * g[j];
  return out;
}

BoundaryGeometry geometry_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "interval") {
    return BoundaryGeometry(
        Interval{j.at("a").get<double>(), j.at("b").get<double>()});
  }
  if (kind == "disk") {
    return BoundaryGeometry(
        Disk{j.at("R").get<double>(), j.at("N").get<int>()});
  }
  throw std::invalid_argument("unknown geometry kind: " + kind);
}

std::string geometry_to_json(const BoundaryGeometry& geom) {
  nlohmann::json j;
  if (geom.is_interval()) {
    j["kind"] = "interval";
    j["a"] = geom.interval().a;
    j["b"] = geom.interval().b;
  } else {
    j["kind"] = "disk";
    j["R"] = geom.disk().R;
    j["N"] = geom.disk().N;
  }
  return j.dump();
}

}  // namespace bdryext
