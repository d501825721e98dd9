#pragma once

#include <complex>

namespace biortho::scalar {

using Complex = std::complex<double>;

/// True when z sits on a pole of Gamma (a nonpositive integer, to within a
/// relative 1e-10).
bool is_gamma_pole(Complex z);

/// Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
/// Throws DomainError at poles.
Complex gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// A logarithm of Gamma(z). The branch is not the principal one in the
/// reflected half-plane, but exp(lgamma(z)) == gamma(z) everywhere.
Complex lgamma(Complex z);

/// sin(pi z) with exact zeros at the integers.
Complex sinpi(Complex z);

}  // namespace biortho::scalar
