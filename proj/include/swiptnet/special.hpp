#pragma once

#include <complex>

#include "swiptnet/errors.hpp"

namespace swipt {

using Complex = std::complex<double>;

// Complex gamma function, Lanczos approximation with reflection for Re(z) < 0.5.
// Throws PoleError at the non-positive integers.
Complex gamma_c(Complex z);

// log|Gamma(x)| and the sign of Gamma(x) for real non-pole x.
double log_abs_gamma(double x, int& sign);

// Beta function continued beyond the positive orthant via Gamma(a)Gamma(b)/Gamma(a+b).
// Symmetric in (a,b); throws PoleError if a, b or a+b is a non-positive integer.
double beta_ext(double a, double b);

// Principal-branch power: |base|^e * cis(e*Arg(base)), Arg in (-pi, pi].
// base == 0 returns 0 for e > 0 and throws DomainError otherwise.
Complex cpow_principal(Complex base, double e);

// Upper incomplete gamma with integer shape, Gamma(n,z) = (n-1)! e^{-z} sum_{k<n} z^k/k!.
// Entire in z; n must be in [1, 170] so (n-1)! stays finite.
Complex upper_gamma_int(int n, Complex z);

// Gamma(n,z)/Gamma(n); the form used by the coverage integrands.
Complex upper_gamma_ratio(int n, Complex z);
double upper_gamma_ratio(int n, double x);

} // namespace swipt
