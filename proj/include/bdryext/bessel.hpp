#pragma once

#include <stdexcept>

namespace bdryext {

struct BesselEnvelopeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Bessel function of the first kind J_m(x). Validity envelope:
/// 0 <= m <= 200, 0 <= x <= 500; absolute accuracy ~1e-13 there.
/// Ascending series for small x, Miller downward recurrence otherwise.
double bessel_j(int m, double x);

/// J_m'(x) = (J_{m-1}(x) - J_{m+1}(x)) / 2, with J_{-1} = -J_1.
double bessel_j_prime(int m, double x);

/// Modified Bessel function I_m(x) by ascending series (same envelope).
double bessel_i(int m, double x);
double bessel_i_prime(int m, double x);

}  // namespace bdryext
