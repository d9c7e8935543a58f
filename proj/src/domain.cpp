#include "bdryext/domain.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace bdryext {

namespace {
constexpr double kPi = std::numbers::pi;
}

DomainFunction::DomainFunction(BoundaryGeometry geom, ScalarField1D value,
                               ScalarField1D dv, ScalarField1D lap,
                               std::string name)
    : geom_(std::move(geom)),
      name_(std::move(name)),
      value_(std::move(value)),
      deriv_(std::move(dv)),
      lap_(std::move(lap)) {
  if (!geom_.is_interval())
    throw std::invalid_argument("1-D evaluators require an interval geometry");
}

DomainFunction::DomainFunction(BoundaryGeometry geom,
                               std::vector<DiskModeComponent> modes,
                               std::string name)
    : geom_(std::move(geom)), name_(std::move(name)), modes_(std::move(modes)) {
  if (!geom_.is_disk())
    throw std::invalid_argument("mode components require a disk geometry");
}

DomainFunction DomainFunction::zero(const BoundaryGeometry& geom) {
  if (geom.is_interval()) {
    auto z = [](double) { return Complex(0, 0); };
    return DomainFunction(geom, z, z, z, "zero");
  }
  return DomainFunction(geom, std::vector<DiskModeComponent>{}, "zero");
}

ComplexVector DomainFunction::trace_values() const {
  const int d = geom_.boundary_dim();
  ComplexVector g = ComplexVector::Zero(d);
  if (geom_.is_interval()) {
    g[0] = value_(geom_.interval().a);
    g[1] = value_(geom_.interval().b);
    return g;
  }
  const double R = geom_.disk().R;
  const double s = std::sqrt(2.0 * kPi * R);
  for (const auto& mc : modes_) {
    if (std::abs(mc.m) > geom_.disk().N)
      throw std::out_of_range("trace: angular mode exceeds the cutoff N");
    g[geom_.index_of_mode(mc.m)] += s * mc.f(R);
  }
  return g;
}

ComplexVector DomainFunction::trace_normal() const {
  const int d = geom_.boundary_dim();
  ComplexVector n = ComplexVector::Zero(d);
  if (geom_.is_interval()) {
    // outward normal: -d/dx at a, +d/dx at b
    n[0] = -deriv_(geom_.interval().a);
    n[1] = deriv_(geom_.interval().b);
    return n;
  }
  const double R = geom_.disk().R;
  const double s = std::sqrt(2.0 * kPi * R);
  for (const auto& mc : modes_) {
    if (std::abs(mc.m) > geom_.disk().N)
      throw std::out_of_range("trace: angular mode exceeds the cutoff N");
    n[geom_.index_of_mode(mc.m)] += s * mc.df(R);
  }
  return n;
}

DomainFunction DomainFunction::scaled(Complex c) const {
  if (geom_.is_interval()) {
    auto v = value_, dv = deriv_, lp = lap_;
    return DomainFunction(
        geom_, [v, c](double x) { return c * v(x); },
        [dv, c](double x) { return c * dv(x); },
        [lp, c](double x) { return c * lp(x); }, name_);
  }
  std::vector<DiskModeComponent> out;
  for (const auto& mc : modes_) {
    auto f = mc.f, df = mc.df, lp = mc.lap;
    out.push_back({mc.m, [f, c](double r) { return c * f(r); },
                   [df, c](double r) { return c * df(r); },
                   [lp, c](double r) { return c * lp(r); }});
  }
  return DomainFunction(geom_, std::move(out), name_);
}

DomainFunction DomainFunction::operator+(const DomainFunction& other) const {
  if (!(geom_ == other.geom_))
    throw DimensionMismatch("DomainFunction: geometry mismatch");
  if (geom_.is_interval()) {
    auto v1 = value_, v2 = other.value_;
    auto d1 = deriv_, d2 = other.deriv_;
    auto l1 = lap_, l2 = other.lap_;
    return DomainFunction(
        geom_, [v1, v2](double x) { return v1(x) + v2(x); },
        [d1, d2](double x) { return d1(x) + d2(x); },
        [l1, l2](double x) { return l1(x) + l2(x); },
        name_ + "+" + other.name_);
  }
  std::vector<DiskModeComponent> out = modes_;
  out.insert(out.end(), other.modes_.begin(), other.modes_.end());
  return DomainFunction(geom_, std::move(out), name_ + "+" + other.name_);
}

DomainFunction DomainFunction::operator-(const DomainFunction& other) const {
  return *this + other.scaled(Complex(-1, 0));
}

Complex simpson(const std::function<Complex(double)>& f, double a, double b,
                int panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  Complex acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i)
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

const std::vector<std::pair<double, double>>& gauss_legendre_128() {
  static const std::vector<std::pair<double, double>> table = [] {
    const int n = 128;
    std::vector<std::pair<double, double>> t(n);
    for (int i = 0; i < n; ++i) {
      // Newton iteration on P_n from the Chebyshev-like initial guess.
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      t[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return t;
  }();
  return table;
}

namespace {

// 2*pi*Integral_0^R w(r) r dr with 128-node Gauss-Legendre.
Complex radial_integral(const std::function<Complex(double)>& w, double R) {
  Complex acc = 0.0;
  for (const auto& [x, wt] : gauss_legendre_128()) {
    const double r = 0.5 * R * (x + 1.0);
    acc += wt * w(r) * r;
  }
  return acc * (0.5 * R) * (2.0 * kPi);
}

}  // namespace

Complex l2_inner(const DomainFunction& u, const DomainFunction& v) {
  if (!(u.geom_ == v.geom_))
    throw DimensionMismatch("l2_inner: geometry mismatch");
  if (u.geom_.is_interval()) {
    auto fu = u.value_, fv = v.value_;
    return simpson(
        [fu, fv](double x) { return std::conj(fu(x)) * fv(x); },
        u.geom_.interval().a, u.geom_.interval().b);
  }
  const double R = u.geom_.disk().R;
  Complex acc = 0.0;
  for (const auto& mu : u.modes_)
    for (const auto& mv : v.modes_) {
      if (mu.m != mv.m) continue;
      auto fu = mu.f, fv = mv.f;
      acc += radial_integral(
          [fu, fv](double r) { return std::conj(fu(r)) * fv(r); }, R);
    }
  return acc;
}

Complex grad_inner(const DomainFunction& u, const DomainFunction& v) {
  if (!(u.geom_ == v.geom_))
    throw DimensionMismatch("grad_inner: geometry mismatch");
  if (u.geom_.is_interval()) {
    auto fu = u.deriv_, fv = v.deriv_;
    return simpson(
        [fu, fv](double x) { return std::conj(fu(x)) * fv(x); },
        u.geom_.interval().a, u.geom_.interval().b);
  }
  const double R = u.geom_.disk().R;
  Complex acc = 0.0;
  for (const auto& mu : u.modes_)
    for (const auto& mv : v.modes_) {
      if (mu.m != mv.m) continue;
      auto fu = mu.f, fv = mv.f, du = mu.df, dv = mv.df;
      const double m2 = static_cast<double>(mu.m) * mu.m;
      acc += radial_integral(
          [fu, fv, du, dv, m2](double r) {
            return std::conj(du(r)) * dv(r) +
                   m2 * std::conj(fu(r)) * fv(r) / (r * r);
          },
          R);
    }
  return acc;
}

Complex laplacian_inner(const DomainFunction& u, const DomainFunction& v) {
  if (!(u.geom_ == v.geom_))
    throw DimensionMismatch("laplacian_inner: geometry mismatch");
  if (u.geom_.is_interval()) {
    auto fu = u.value_, lv = v.lap_;
    return -simpson(
        [fu, lv](double x) { return std::conj(fu(x)) * lv(x); },
        u.geom_.interval().a, u.geom_.interval().b);
  }
  const double R = u.geom_.disk().R;
  Complex acc = 0.0;
  for (const auto& mu : u.modes_)
    for (const auto& mv : v.modes_) {
      if (mu.m != mv.m) continue;
      auto fu = mu.f, lv = mv.lap;
      acc += radial_integral(
          [fu, lv](double r) { return std::conj(fu(r)) * lv(r); }, R);
    }
  return -acc;
}

double l2_norm(const DomainFunction& u) {
  return std::sqrt(std::abs(l2_inner(u, u)));
}

ComplexMatrix dtn(const BoundaryGeometry& geom) {
  const int d = geom.boundary_dim();
  ComplexMatrix D = ComplexMatrix::Zero(d, d);
  if (geom.is_interval()) {
    const double ell = geom.interval().length();
    D << 1.0 / ell, -1.0 / ell, -1.0 / ell, 1.0 / ell;
    return D;
  }
  const double R = geom.disk().R;
  for (int j = 0; j < d; ++j) D(j, j) = std::abs(geom.mode_at(j)) / R;
  return D;
}

ComplexVector mu_from_trace(const BoundaryGeometry& geom,
                            const ComplexVector& g_raw,
                            const ComplexVector& n_raw) {
  const int d = geom.boundary_dim();
  if (g_raw.size() != d || n_raw.size() != d)
    throw DimensionMismatch("mu_from_trace: bad vector length");
  ComplexVector resid = n_raw - dtn(geom) * g_raw;
  RealVector w = sobolev_weights(geom, 0.5);  // (1+lambda)^{1/4}
  ComplexVector mu(d);
  for (int j = 0; j < d; ++j) mu[j] = w[j] * resid[j];
  return mu;
}

ComplexVector gamma_hat(const BoundaryGeometry& geom,
                        const ComplexVector& g_raw) {
  return raw_to_hat(geom, g_raw);
}

DomainFunction harmonic_extension(const BoundaryGeometry& geom,
                                  const ComplexVector& g_raw) {
  if (g_raw.size() != geom.boundary_dim())
    throw DimensionMismatch("harmonic_extension: bad vector length");
  if (geom.is_interval()) {
    const double a = geom.interval().a;
    const double ell = geom.interval().length();
    const Complex g0 = g_raw[0], g1 = g_raw[1];
    const Complex slope = (g1 - g0) / ell;
    return DomainFunction(
        geom, [g0, slope, a](double x) { return g0 + slope * (x - a); },
        [slope](double) { return slope; }, [](double) { return Complex(0); },
        "harmonic_ext");
  }
  const double R = geom.disk().R;
  const double s = std::sqrt(2.0 * kPi * R);
  std::vector<DiskModeComponent> modes;
  for (int j = 0; j < geom.boundary_dim(); ++j) {
    if (g_raw[j] == Complex(0, 0)) continue;
    const int m = geom.mode_at(j);
    const int am = std::abs(m);
    const Complex c = g_raw[j] / s;  // profile value at r = R is g/s
    modes.push_back(
        {m,
         [c, am, R](double r) { return c * std::pow(r / R, am); },
         [c, am, R](double r) {
           return am == 0 ? Complex(0)
                          : c * double(am) * std::pow(r / R, am - 1) / R;
         },
         [](double) { return Complex(0); }});
  }
  return DomainFunction(geom, std::move(modes), "harmonic_ext");
}

DomainFunction pi_d(const DomainFunction& psi) {
  return psi - harmonic_extension(psi.geometry(), psi.trace_values());
}

std::vector<DomainFunction> catalog_corpus(const BoundaryGeometry& geom) {
  std::vector<DomainFunction> out;
  if (geom.is_interval()) {
    const double a = geom.interval().a;
    const double ell = geom.interval().length();
    auto zero = [](double) { return Complex(0); };
    out.emplace_back(
        geom, [](double) { return Complex(1); }, zero, zero, "one");
    out.emplace_back(
        geom, [a](double x) { return Complex(x - a); },
        [](double) { return Complex(1); }, zero, "linear");
    out.emplace_back(
        geom, [a](double x) { return Complex((x - a) * (x - a)); },
        [a](double x) { return Complex(2 * (x - a)); },
        [](double) { return Complex(2); }, "quadratic");
    out.emplace_back(
        geom, [a](double x) { return Complex(std::sin(x - a)); },
        [a](double x) { return Complex(std::cos(x - a)); },
        [a](double x) { return Complex(-std::sin(x - a)); }, "sine");
    out.emplace_back(
        geom, [a](double x) { return Complex(std::cos(x - a)); },
        [a](double x) { return Complex(-std::sin(x - a)); },
        [a](double x) { return Complex(-std::cos(x - a)); }, "cosine");
    out.emplace_back(
        geom, [a](double x) { return Complex(std::exp(x - a)); },
        [a](double x) { return Complex(std::exp(x - a)); },
        [a](double x) { return Complex(std::exp(x - a)); }, "exp");
    out.emplace_back(
        geom, [a, ell](double x) { return Complex((x - a) * (ell - (x - a))); },
        [a, ell](double x) { return Complex(ell - 2 * (x - a)); },
        [](double) { return Complex(-2); }, "bubble");
    auto b2 = [a, ell](double x) {
      const double t = x - a;
      return Complex(t * t * (ell - t) * (ell - t));
    };
    auto db2 = [a, ell](double x) {
      const double t = x - a;
      return Complex(2 * t * (ell - t) * (ell - t) - 2 * t * t * (ell - t));
    };
    auto lb2 = [a, ell](double x) {
      const double t = x - a;
      return Complex(2 * (ell - t) * (ell - t) - 8 * t * (ell - t) +
                     2 * t * t);
    };
    out.emplace_back(geom, b2, db2, lb2, "bubble_sq");
    out.emplace_back(
        geom,
        [a](double x) { return std::exp(Complex(0, 1) * (x - a)); },
        [a](double x) {
          return Complex(0, 1) * std::exp(Complex(0, 1) * (x - a));
        },
        [a](double x) { return -std::exp(Complex(0, 1) * (x - a)); },
        "complex_wave");
    out.emplace_back(
        geom,
        [a](double x) { return Complex(std::sin(x - a) + (x - a)); },
        [a](double x) { return Complex(std::cos(x - a) + 1.0); },
        [a](double x) { return Complex(-std::sin(x - a)); }, "sine_plus_linear");
    return out;
  }

  const double R = geom.disk().R;
  const int N = geom.disk().N;
  auto zero = [](double) { return Complex(0); };
  auto add_mode = [&](int m, ScalarField1D f, ScalarField1D df,
                      ScalarField1D lap, const std::string& name) {
    if (std::abs(m) > N) return;
    out.emplace_back(geom, std::vector<DiskModeComponent>{{m, f, df, lap}},
                     name);
  };
  add_mode(0, [](double) { return Complex(1); }, zero, zero, "one");
  add_mode(
      0, [](double r) { return Complex(r * r); },
      [](double r) { return Complex(2 * r); },
      [](double) { return Complex(4); }, "r_sq");
  add_mode(
      0, [R](double r) { return Complex(1 - (r / R) * (r / R)); },
      [R](double r) { return Complex(-2 * r / (R * R)); },
      [R](double) { return Complex(-4 / (R * R)); }, "paraboloid");
  add_mode(
      0,
      [R](double r) {
        const double u = r / R;
        return Complex((1 - u * u) * (1 - u * u));
      },
      [R](double r) {
        const double u = r / R;
        return Complex((-4 * u + 4 * u * u * u) / R);
      },
      [R](double r) {
        const double u = r / R;
        return Complex((16 * u * u - 8) / (R * R));
      },
      "bubble_sq");
  add_mode(
      1, [](double r) { return Complex(r); },
      [](double) { return Complex(1); }, zero, "m1_harmonic");
  add_mode(
      1, [](double r) { return Complex(r * r * r); },
      [](double r) { return Complex(3 * r * r); },
      [](double r) { return Complex(8 * r); }, "m1_cubic");
  add_mode(
      -1, [](double r) { return Complex(r); },
      [](double) { return Complex(1); }, zero, "m-1_harmonic");
  add_mode(
      2, [](double r) { return Complex(r * r); },
      [](double r) { return Complex(2 * r); }, zero, "m2_harmonic");
  add_mode(
      2, [](double r) { return Complex(r * r * r * r); },
      [](double r) { return Complex(4 * r * r * r); },
      [](double r) { return Complex(12 * r * r); }, "m2_quartic");
  return out;
}

}  // namespace bdryext
