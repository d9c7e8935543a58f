#include "bdryext/spectral.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "bdryext/bessel.hpp"
#include "bdryext/extension.hpp"

namespace bdryext {

namespace {

constexpr double kSigmaAccept = 1e-8;

// Raw trace data (g, n) of energy-basis solution j at energy lambda.
void basis_trace(const BoundaryGeometry& geom, double lambda, int j,
                 ComplexVector& g, ComplexVector& n) {
  const int d = geom.boundary_dim();
  g = ComplexVector::Zero(d);
  n = ComplexVector::Zero(d);
  if (geom.is_interval()) {
    const double ell = geom.interval().length();
    if (lambda > 0.0) {
      const double k = std::sqrt(lambda);
      if (j == 0) {  // cos k(x-a)
        g << 1.0, std::cos(k * ell);
        n << 0.0, -k * std::sin(k * ell);
      } else {  // sin k(x-a)
        g << 0.0, std::sin(k * ell);
        n << -k, k * std::cos(k * ell);
      }
    } else if (lambda == 0.0) {
      if (j == 0) {  // constant
        g << 1.0, 1.0;
        n << 0.0, 0.0;
      } else {  // x - a
        g << 0.0, ell;
        n << -1.0, 1.0;
      }
    } else {
      // decaying exponentials anchored at each endpoint; the cosh/sinh
      // pair degenerates for large kappa (columns parallel up to
      // e^{-2 kappa ell}, faking kernel vectors), this pair stays
      // well-conditioned over the whole negative window
      const double kap = std::sqrt(-lambda);
      const double e1 = std::exp(-kap * ell);
      if (j == 0) {  // e^{-kappa (x-a)}
        g << 1.0, e1;
        n << kap, -kap * e1;
      } else {  // e^{-kappa (b-x)}
        g << e1, 1.0;
        n << -kap * e1, kap;
      }
    }
    return;
  }

  const double R = geom.disk().R;
  const int m = std::abs(geom.mode_at(j));
  const double s = std::sqrt(2.0 * M_PI * R);
  if (lambda > 0.0) {
    const double k = std::sqrt(lambda);
    g[j] = s * bessel_j(m, k * R);
    n[j] = s * k * bessel_j_prime(m, k * R);
  } else if (lambda == 0.0) {
    g[j] = s;
    n[j] = s * m / R;
  } else {
    const double kap = std::sqrt(-lambda);
    const double im = bessel_i(m, kap * R);
    g[j] = s;  // profile I_m(kappa r) / I_m(kappa R)
    n[j] = s * kap * bessel_i_prime(m, kap * R) / im;
  }
}

struct SecularData {
  ComplexMatrix matrix;
  RealVector scales;
};

SecularData build_secular(const BoundaryGeometry& geom, const ComplexMatrix& U,
                          double lambda) {
  const int d = geom.boundary_dim();
  if (U.rows() != d || U.cols() != d)
    throw DimensionMismatch("secular_matrix: U does not match the geometry");
  SecularData out;
  out.matrix.resize(d, d);
  out.scales.resize(d);
  ComplexVector g, n;
  for (int j = 0; j < d; ++j) {
    basis_trace(geom, lambda, j, g, n);
    BoundaryPair p{gamma_hat(geom, g), mu_from_trace(geom, g, n)};
    double scale = p.g.norm() + p.u.norm();
    if (scale < 1e-280) scale = 1.0;
    out.scales[j] = scale;
    out.matrix.col(j) = bc_residual(U, p) / scale;
  }
  return out;
}

double sigma_min_of(const ComplexMatrix& A) {
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  return svd.singularValues()[A.cols() - 1];
}

struct Root {
  double lambda;
  int mult;
  double resid;
};

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 300 && (hi - lo) > tol; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ComplexMatrix secular_matrix(const BoundaryGeometry& geom,
                             const ComplexMatrix& U, double lambda) {
  return build_secular(geom, U, lambda).matrix;
}

double secular_sigma_min(const BoundaryGeometry& geom, const ComplexMatrix& U,
                         double lambda) {
  return sigma_min_of(build_secular(geom, U, lambda).matrix);
}

SpectrumResult scan_spectrum(const BoundaryGeometry& geom,
                             const ComplexMatrix& U, double lambda_min,
                             double lambda_max, int grid_points) {
  if (!(lambda_min < lambda_max))
    throw std::invalid_argument("scan_spectrum: empty window");
  if (grid_points < 16)
    throw std::invalid_argument("scan_spectrum: grid_points >= 16 required");

  auto sigma = [&](double lam) { return secular_sigma_min(geom, U, lam); };

  std::vector<Root> roots;
  auto try_accept = [&](double lam) {
    const int d = geom.boundary_dim();
    Eigen::JacobiSVD<ComplexMatrix> svd(build_secular(geom, U, lam).matrix);
    const double smin = svd.singularValues()[d - 1];
    if (smin > kSigmaAccept) return;
    int mult = 0;
    for (int j = 0; j < d; ++j)
      if (svd.singularValues()[j] <= kSigmaAccept) ++mult;
    roots.push_back({lam, mult, smin});
  };

  // Dedicated polynomial-basis probe at lambda = 0.
  if (lambda_min < 0.0 && lambda_max > 0.0) try_accept(0.0);

  auto refine = [&](double lo, double hi) {
    const double tol = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    try_accept(golden_section(sigma, lo, hi, tol));
  };
  auto scan_segment = [&](const std::vector<double>& grid) {
    if (grid.size() < 3) return;
    const std::size_t n = grid.size();
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = sigma(grid[i]);
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (s[i] <= s[i - 1] && s[i] <= s[i + 1]) refine(grid[i - 1], grid[i + 1]);
    // roots between the window edge and the first/last sample
    if (s[0] <= s[1]) refine(grid[0], grid[1]);
    if (s[n - 1] <= s[n - 2]) refine(grid[n - 2], grid[n - 1]);
  };

  const double neg_len = std::max(0.0, -lambda_min) -
                         std::max(0.0, -lambda_max);
  const double pos_len = std::max(0.0, lambda_max) - std::max(0.0, lambda_min);
  const double total = neg_len + pos_len;

  if (pos_len > 0.0) {
    const int n = std::max(16, static_cast<int>(grid_points * pos_len / total));
    const double lo = std::max(1e-12, lambda_min);
    const double hi = lambda_max;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
      grid[i] = lo + (hi - lo) * i / (n - 1.0);
    scan_segment(grid);
  }
  if (neg_len > 0.0) {
    // uniform in kappa = sqrt(-lambda); bound-state dips are even there
    const int n = std::max(16, static_cast<int>(grid_points * neg_len / total));
    const double kap_hi = std::sqrt(-lambda_min);
    const double kap_lo = std::sqrt(std::max(0.0, -lambda_max));
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
      const double kap = kap_hi - (kap_hi - kap_lo) * i / (n - 1.0);
      grid[i] = -kap * kap;
    }
    scan_segment(grid);
  }

  std::sort(roots.begin(), roots.end(),
            [](const Root& x, const Root& y) { return x.lambda < y.lambda; });

  // The same root can be found from both the grid and the lambda=0 probe;
  // coincident roots keep the best residual and the full sigma count.
  SpectrumResult res;
  res.window_min = lambda_min;
  res.window_max = lambda_max;
  for (const auto& r : roots) {
    if (!res.eigenvalues.empty() &&
        std::abs(r.lambda - res.eigenvalues.back()) <=
            1e-9 * std::max(1.0, std::abs(r.lambda))) {
      res.multiplicities.back() = std::max(res.multiplicities.back(), r.mult);
      if (r.resid < res.residuals.back()) {
        res.residuals.back() = r.resid;
        res.eigenvalues.back() = r.lambda;
      }
      continue;
    }
    res.eigenvalues.push_back(r.lambda);
    res.multiplicities.push_back(r.mult);
    res.residuals.push_back(r.resid);
  }
  return res;
}

DomainFunction mode_state_function(const ModeState& state) {
  const auto& geom = state.geom;
  const double lam = state.lambda;
  if (geom.is_interval()) {
    const double a = geom.interval().a;
    const double ell = geom.interval().length();
    const Complex c1 = state.coeffs[0], c2 = state.coeffs[1];
    if (lam > 0.0) {
      const double k = std::sqrt(lam);
      auto v = [c1, c2, k, a](double x) {
        return c1 * std::cos(k * (x - a)) + c2 * std::sin(k * (x - a));
      };
      auto dv = [c1, c2, k, a](double x) {
        return -c1 * k * std::sin(k * (x - a)) + c2 * k * std::cos(k * (x - a));
      };
      auto lp = [v, lam](double x) { return -lam * v(x); };
      return DomainFunction(geom, v, dv, lp, "mode_state");
    }
    if (lam == 0.0) {
      auto v = [c1, c2, a](double x) { return c1 + c2 * (x - a); };
      auto dv = [c2](double) { return c2; };
      auto lp = [](double) { return Complex(0); };
      return DomainFunction(geom, v, dv, lp, "mode_state");
    }
    const double kap = std::sqrt(-lam);
    const double b = a + ell;
    auto v = [c1, c2, kap, a, b](double x) {
      return c1 * std::exp(-kap * (x - a)) + c2 * std::exp(-kap * (b - x));
    };
    auto dv = [c1, c2, kap, a, b](double x) {
      return -c1 * kap * std::exp(-kap * (x - a)) +
             c2 * kap * std::exp(-kap * (b - x));
    };
    auto lp = [v, lam](double x) { return -lam * v(x); };
    return DomainFunction(geom, v, dv, lp, "mode_state");
  }

  const double R = geom.disk().R;
  std::vector<DiskModeComponent> modes;
  for (int j = 0; j < geom.boundary_dim(); ++j) {
    const Complex c = state.coeffs[j];
    if (c == Complex(0, 0)) continue;
    const int m = geom.mode_at(j);
    const int am = std::abs(m);
    ScalarField1D f, df;
    if (lam > 0.0) {
      const double k = std::sqrt(lam);
      f = [c, am, k](double r) { return c * bessel_j(am, k * r); };
      df = [c, am, k](double r) { return c * k * bessel_j_prime(am, k * r); };
    } else if (lam == 0.0) {
      f = [c, am, R](double r) { return c * std::pow(r / R, am); };
      df = [c, am, R](double r) {
        return am == 0 ? Complex(0)
                       : c * double(am) * std::pow(r / R, am - 1) / R;
      };
    } else {
      const double kap = std::sqrt(-lam);
      const double norm = bessel_i(am, kap * R);
      f = [c, am, kap, norm](double r) {
        return c * bessel_i(am, kap * r) / norm;
      };
      df = [c, am, kap, norm](double r) {
        return c * kap * bessel_i_prime(am, kap * r) / norm;
      };
    }
    auto lp = [f, lam](double r) { return -lam * f(r); };
    modes.push_back({m, f, df, lp});
  }
  return DomainFunction(geom, std::move(modes), "mode_state");
}

std::pair<ComplexVector, ComplexVector> trace_data(const ModeState& state) {
  const int d = state.geom.boundary_dim();
  ComplexVector g = ComplexVector::Zero(d), n = ComplexVector::Zero(d);
  ComplexVector gj, nj;
  const int ncols = state.geom.is_interval() ? 2 : d;
  for (int j = 0; j < ncols; ++j) {
    basis_trace(state.geom, state.lambda, j, gj, nj);
    g += state.coeffs[j] * gj;
    n += state.coeffs[j] * nj;
  }
  return {g, n};
}

std::vector<ModeState> eigenfunctions(const BoundaryGeometry& geom,
                                      const ComplexMatrix& U, double lambda) {
  SecularData sec = build_secular(geom, U, lambda);
  const int d = geom.boundary_dim();
  Eigen::JacobiSVD<ComplexMatrix> svd(sec.matrix, Eigen::ComputeFullV);
  if (svd.singularValues()[d - 1] > 1e-7)
    throw std::invalid_argument(
        "eigenfunction: lambda is not an accepted spectral root");
  std::vector<ModeState> out;
  for (int j = d - 1; j >= 0; --j) {
    if (svd.singularValues()[j] > 1e-7) break;
    ModeState st{geom, lambda, ComplexVector(d)};
    for (int i = 0; i < d; ++i)
      st.coeffs[i] = svd.matrixV()(i, j) / sec.scales[i];
    if (geom.is_interval()) st.coeffs.conservativeResize(2);
    const double nrm = l2_norm(mode_state_function(st));
    st.coeffs /= nrm;
    out.push_back(std::move(st));
  }
  return out;
}

ModeState eigenfunction(const BoundaryGeometry& geom, const ComplexMatrix& U,
                        double lambda) {
  return eigenfunctions(geom, U, lambda).front();
}

}  // namespace bdryext
