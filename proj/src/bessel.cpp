#include "bdryext/bessel.hpp"

#include <cmath>
#include <vector>

namespace bdryext {

namespace {

void check_envelope(int m, double x) {
  if (m < 0 || m > 200 || x < 0.0 || x > 500.0)
    throw BesselEnvelopeError("bessel: outside validity envelope m<=200, x<=500");
}

// Ascending power series; safe from cancellation for x up to ~10.
double series_j(int m, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= m; ++k) term *= half / k;  // (x/2)^m / m!
  double sum = term;
  const double x2 = -half * half;
  for (int k = 1; k < 80; ++k) {
    term *= x2 / (k * (k + m));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Miller downward recurrence, normalized by J_0 + 2*sum J_{2k} = 1.
double miller_j(int m, double x) {
  const int big = std::max(m, static_cast<int>(x));
  const int start = big + 20 + static_cast<int>(12.0 * std::sqrt(big + 1.0));
  double jp = 0.0;       // J_{k+1} (unnormalized)
  double jc = 1e-300;    // J_k
  double norm = 0.0;
  double jm_val = 0.0;
  for (int k = start; k >= 0; --k) {
    double jmn = (2.0 * (k + 1) / x) * jc - jp;
    jp = jc;
    jc = jmn;
    if (std::abs(jc) > 1e250) {  // rescale to avoid overflow
      jc *= 1e-250;
      jp *= 1e-250;
      norm *= 1e-250;
      jm_val *= 1e-250;
    }
    if (k == m) jm_val = jc;
    if (k > 0 && k % 2 == 0) norm += 2.0 * jc;
  }
  norm += jc;  // jc now holds unnormalized J_0
  return jm_val / norm;
}

}  // namespace

double bessel_j(int m, double x) {
  check_envelope(m, x);
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x <= 10.0 && m <= 60) return series_j(m, x);
  return miller_j(m, x);
}

double bessel_j_prime(int m, double x) {
  check_envelope(m, x);
  const double jm1 = (m == 0) ? -bessel_j(1, x) : bessel_j(m - 1, x);
  return 0.5 * (jm1 - bessel_j(m + 1, x));
}

double bessel_i(int m, double x) {
  check_envelope(m, x);
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= m; ++k) term *= half / k;
  double sum = term;
  const double x2 = half * half;
  for (int k = 1; k < 400; ++k) {
    term *= x2 / (k * (k + m));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double bessel_i_prime(int m, double x) {
  check_envelope(m, x);
  if (x == 0.0) return m == 1 ? 0.5 : 0.0;
  const double im1 = (m == 0) ? bessel_i(1, x) : bessel_i(m - 1, x);
  return 0.5 * (im1 + bessel_i(m + 1, x));
}

}  // namespace bdryext
