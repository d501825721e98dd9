#include "biortho/gamma.hpp"

#include <cmath>
#include <numbers>

#include "biortho/errors.hpp"

namespace biortho::scalar {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kG = 7.0;
constexpr double kCoeffs[] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos series for Re z >= 1/2 (argument shifted by one).
Complex lanczos_sum(Complex zm1) {
  Complex x = kCoeffs[0];
  for (int i = 1; i < 9; ++i) x += kCoeffs[i] / (zm1 + static_cast<double>(i));
  return x;
}

Complex lgamma_right(Complex z) {
  const Complex zm1 = z - 1.0;
  const Complex t = zm1 + kG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zm1));
}

Complex gamma_right(Complex z) {
  const Complex zm1 = z - 1.0;
  const Complex t = zm1 + kG + 0.5;
  return std::exp(kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t) *
         lanczos_sum(zm1);
}

double sinpi_real(double x) {
  const double n = std::round(x);
  const double s = std::sin(std::numbers::pi * (x - n));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cospi_real(double x) {
  const double n = std::round(x);
  const double f = x - n;
  if (std::abs(f) == 0.5) return 0.0;
  const double c = std::cos(std::numbers::pi * f);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

}  // namespace

Complex sinpi(Complex z) {
  const double py = std::numbers::pi * z.imag();
  return {sinpi_real(z.real()) * std::cosh(py),
          cospi_real(z.real()) * std::sinh(py)};
}

bool is_gamma_pole(Complex z) {
  const double tol = 1e-10 * std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) > tol) return false;
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= tol;
}

Complex gamma(Complex z) {
  if (is_gamma_pole(z)) throw DomainError("gamma: argument at a pole");
  if (z.real() >= 0.5) return gamma_right(z);
  return std::numbers::pi / (sinpi(z) * gamma_right(1.0 - z));
}

Complex rgamma(Complex z) {
  if (is_gamma_pole(z)) return 0.0;
  if (z.real() >= 0.5) {
    // exp(-lgamma) stays finite where Gamma itself overflows.
    return std::exp(-lgamma_right(z));
  }
  return sinpi(z) * gamma_right(1.0 - z) / std::numbers::pi;
}

Complex lgamma(Complex z) {
  if (is_gamma_pole(z)) throw DomainError("lgamma: argument at a pole");
  if (z.real() >= 0.5) return lgamma_right(z);
  return std::log(std::numbers::pi) - std::log(sinpi(z)) -
         lgamma_right(1.0 - z);
}

}  // namespace biortho::scalar
