#pragma once

#include <span>
#include <vector>

#include "biortho/matrix_poly.hpp"
#include "biortho/params.hpp"

namespace biortho {

/// Gauss-Legendre rule on (0, 1) carried to (0, inf) by
/// u = (t / (1 - t))^grading. grading = 1 is the plain t/(1-t) map; larger
/// values flatten the algebraic endpoint behaviour u^C near 0 and the
/// polynomial tail near infinity so the rule converges geometrically.
struct QuadRule {
  int points = 0;
  int grading = 1;
  std::vector<double> nodes;    // strictly increasing in (0, 1)
  std::vector<double> weights;  // positive, sum to 1

  static QuadRule gauss_legendre(int points, int grading = 6);

  double u(double t) const;
  double jacobian(double t) const;
  /// Same rule with twice the points.
  QuadRule refined() const { return gauss_legendre(2 * points, grading); }
};

struct QuadResult {
  Matrix value;
  /// ||value(q) - value(2q)||_F; value holds the 2q result.
  double error_estimate = 0.0;
  /// int ||W(u)||_F ||prod P(u)||_F du, the cancellation scale.
  double abs_mass = 0.0;
};

/// int_0^inf W(u) P_1(u) ... P_m(u) du with W(u) = u^C (1+u)^{-(H+C)}.
/// Throws DomainError unless the integrand decays at infinity, i.e.
/// Re(x) > 1 + sum deg P_k on spec(H).
QuadResult integrate_weighted(const ParamSet& params,
                              std::span<const MatrixPoly> factors,
                              const QuadRule& rule);

}  // namespace biortho
