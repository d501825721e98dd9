#include "biortho/identities.hpp"

#include "biortho/errors.hpp"
#include "biortho/family.hpp"
#include "biortho/special.hpp"

namespace biortho {

namespace {

double sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// (-u)^d as a literal sign times a degree shift.
MatrixPoly times_neg_u_power(const MatrixPoly& p, int d) {
  return sign(d) * shift_degree(p, d);
}

void require_n(int n, int lowest, const char* what) {
  if (n < lowest) throw DomainError(std::string(what) + ": degree out of range");
}

}  // namespace

PolyIdentity ode_identity(const ParamSet& params, int n) {
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const MatrixPoly m = m_first(params, n);

  const MatrixPoly lhs =
      euler_apply(operator_pochhammer_apply(m, params.c() + (1.0 - v) * id, v));

  const MatrixPoly inner =
      operator_pochhammer_apply(m, static_cast<double>(n + 1) * id - params.h(), v);
  const MatrixPoly shifted_euler = euler_apply(inner) - static_cast<double>(v * n) * inner;
  return {lhs, times_neg_u_power(shifted_euler, v)};
}

MatrixPoly ode_residual(const ParamSet& params, int n) {
  return ode_identity(params, n).difference();
}

PolyIdentity rec1(const ParamSet& params, int n) {
  require_n(n, 1, "rec1");
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const MatrixPoly m = m_first(params, n);
  const MatrixPoly lower = m_first(params.shifted(-1.0, 0.0), n - 1);
  const Matrix factor = pochhammer(params.c() + static_cast<double>(v * n - v + 1) * id, v);
  MatrixPoly rhs = static_cast<double>(v * n) * (m + factor * lower);
  return {euler_apply(m), std::move(rhs)};
}

PolyIdentity rec2(const ParamSet& params, int n) {
  require_n(n, 0, "rec2");
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const MatrixPoly m = m_first(params, n);
  const MatrixPoly c_lowered = m_first(params.shifted(0.0, -1.0), n);
  MatrixPoly rhs = (static_cast<double>(v * n) * id + params.c()) * c_lowered - params.c() * m;
  return {euler_apply(m), std::move(rhs)};
}

PolyIdentity rec3(const ParamSet& params, int n) {
  require_n(n, 1, "rec3");
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const MatrixPoly m = m_first(params, n);
  const MatrixPoly lower =
      m_first(params.shifted(-static_cast<double>(1 + v), static_cast<double>(v)), n - 1);
  const Matrix factor = pochhammer(static_cast<double>(1 + n) * id - params.h(), v);
  MatrixPoly rhs = static_cast<double>(-n * v) * times_neg_u_power(factor * lower, v - 1);
  return {derivative(m), std::move(rhs)};
}

PolyIdentity rec4(const ParamSet& params, int n, int k) {
  if (k < 0 || k > n) throw DomainError("rec4: need 0 <= k <= n");
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  MatrixPoly lhs = m_first(params, n);
  for (int i = 0; i < k; ++i) lhs = derivative(lhs);

  Matrix factor = id;
  for (int j = 0; j < k; ++j) {
    factor = factor * pochhammer(static_cast<double>(1 + n + v * j) * id - params.h(), v);
  }
  double scalar = std::pow(-static_cast<double>(v), k);
  for (int i = 0; i < k; ++i) scalar *= static_cast<double>(n - k + 1 + i);
  const MatrixPoly lower = m_first(
      params.shifted(-static_cast<double>(k * (v + 1)), static_cast<double>(k * v)), n - k);
  MatrixPoly rhs = scalar * times_neg_u_power(factor * lower, (v - 1) * k);
  return {std::move(lhs), std::move(rhs)};
}

PolyIdentity integral_representation(const ParamSet& params, int n,
                                     IntegralReading reading) {
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const MatrixPoly m = m_first(params, n);
  MatrixPoly lhs = antiderivative(shift_degree(m, v - 1));

  const Matrix pre = inverse(pochhammer(static_cast<double>(n + 1 - v) * id - params.h(), v));
  const Matrix constant = sign(n) * pochhammer(params.c() + (1.0 - v) * id, (1 + n) * v);

  double scalar = 0.0;
  double h_shift = 0.0;
  switch (reading) {
    case IntegralReading::antiderivative:
    case IntegralReading::composed_bound:
      scalar = v * sign(v) / static_cast<double>(n + 1);
      h_shift = v;
      break;
    case IntegralReading::adjusted:
      scalar = sign(v) / (static_cast<double>(v) * (n + 1));
      h_shift = v + 1;
      break;
  }
  const MatrixPoly upper = m_first(params.shifted(h_shift, -static_cast<double>(v)), n + 1);
  MatrixPoly rhs = scalar * (pre * (MatrixPoly::constant(constant) + upper));
  if (reading == IntegralReading::composed_bound) {
    lhs = compose_power(lhs, v, sign(v));
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace biortho
