#pragma once

#include "biortho/matrix_poly.hpp"
#include "biortho/params.hpp"

namespace biortho {

/// Two independently built sides of a polynomial identity.
struct PolyIdentity {
  MatrixPoly lhs;
  MatrixPoly rhs;

  /// Max coefficient norm of lhs - rhs over the larger side's max norm.
  double residual() const { return relative_difference(lhs, rhs); }
  MatrixPoly difference() const { return lhs - rhs; }
};

/// Both branches of the matrix ODE applied to M_n; lhs is
/// uD (uD + C + (1-u)I)_u M_n, rhs is (-u)^u (uD - u n)(uD + (n+1)I - H)_u M_n.
PolyIdentity ode_identity(const ParamSet& params, int n);

/// lhs - rhs of `ode_identity`.
MatrixPoly ode_residual(const ParamSet& params, int n);

/// uD M_n = u n [M_n + (C + (un - u + 1)I)_u M_{n-1}^{(H-I, C)}],  n >= 1.
PolyIdentity rec1(const ParamSet& params, int n);

/// uD M_n = (u n I + C) M_n^{(H, C-I)} - C M_n.
PolyIdentity rec2(const ParamSet& params, int n);

/// D M_n = -n u (-u)^{u-1} ((1+n)I - H)_u M_{n-1}^{(H-(1+u)I, uI+C)},  n >= 1.
PolyIdentity rec3(const ParamSet& params, int n);

/// k-fold form of rec3 exactly as stated:
/// D^k M_n = (-u)^k (-u)^{(u-1)k} (n-k+1)_k prod_{j<k} ((1+n+uj)I - H)_u
///           M_{n-k}^{(H - k(u+1)I, C + k u I)}.
PolyIdentity rec4(const ParamSet& params, int n, int k);

/// Variable conventions for the integral representation
///   int_0^{(-u)^v} M_n(u) u^{v-1} du
///     = v(-1)^v/(n+1) [((n+1-v)I - H)_v]^{-1}
///       [(-1)^n (C + (1-v)I)_{(n+1)v} + M_{n+1}^{(H+vI, C-vI)}(u)].
enum class IntegralReading {
  /// lhs is the antiderivative A(x) = int_0^x M_n(t) t^{v-1} dt.
  antiderivative,
  /// lhs is A((-x)^v).
  composed_bound,
  /// Antiderivative reading with shift H + (1+v)I and prefactor
  /// (-1)^v / (v (n+1)); the form the coefficients actually satisfy.
  adjusted,
};

PolyIdentity integral_representation(const ParamSet& params, int n,
                                     IntegralReading reading);

}  // namespace biortho
