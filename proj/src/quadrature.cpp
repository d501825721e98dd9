#include "biortho/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "biortho/errors.hpp"

namespace biortho {

QuadRule QuadRule::gauss_legendre(int points, int grading) {
  if (points < 1) throw DomainError("gauss_legendre: need at least one point");
  if (grading < 1) throw DomainError("gauss_legendre: grading must be positive");
  QuadRule rule;
  rule.points = points;
  rule.grading = grading;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (points == 1) p0 = 1.0;
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (points == 1) p0 = 1.0;
      dp = points * (x * p1 - p0) / (x * x - 1.0);
    }
    // Map [-1, 1] -> (0, 1); x runs from +1 downwards.
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[points - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[points - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double QuadRule::u(double t) const { return std::pow(t / (1.0 - t), grading); }

double QuadRule::jacobian(double t) const {
  const double r = t / (1.0 - t);
  return grading * std::pow(r, grading - 1) / ((1.0 - t) * (1.0 - t));
}

namespace {

// P(u) / u^{deg P} evaluated by Horner in 1/u.
Matrix eval_reversed(const MatrixPoly& p, double inv_u) {
  Matrix acc = p.coeffs()[0];
  for (int k = 1; k <= p.degree(); ++k) acc = acc * inv_u + p.coeffs()[k];
  return acc;
}

Matrix integrate_once(const ParamSet& params, std::span<const MatrixPoly> factors,
                      const QuadRule& rule, int total_degree, double* mass) {
  const JointEigensystem& js = params.joint();
  const Index p = params.dim();
  const Vector& hv = js.values[0];
  const Vector& cv = js.values[1];
  Matrix acc = Matrix::Zero(p, p);
  double abs_acc = 0.0;
  Vector diag(p);
  for (int q = 0; q < rule.points; ++q) {
    const double t = rule.nodes[q];
    const double u = rule.u(t);
    const double wj = rule.weights[q] * rule.jacobian(t);
    if (!(wj > 0.0) || !std::isfinite(u) || !std::isfinite(wj)) continue;
    // Large u: fold u^{total_degree} into the weight so neither factor
    // overflows.
    const bool scaled = u > 1.0;
    const double lu = std::log(u);
    const double l1u = std::log1p(u);
    const double extra = scaled ? static_cast<double>(total_degree) : 0.0;
    for (Index i = 0; i < p; ++i) {
      diag(i) = std::exp((cv(i) + extra) * lu - (hv(i) + cv(i)) * l1u);
    }
    const Matrix w = js.vectors * diag.asDiagonal() * js.inverse;
    Matrix prod = Matrix::Identity(p, p);
    for (const MatrixPoly& f : factors) {
      prod = prod * (scaled ? eval_reversed(f, 1.0 / u) : f(u));
    }
    const Matrix integrand = w * prod;
    acc += wj * integrand;
    abs_acc += wj * w.norm() * prod.norm();
  }
  if (mass) *mass = abs_acc;
  return acc;
}

}  // namespace

QuadResult integrate_weighted(const ParamSet& params,
                              std::span<const MatrixPoly> factors,
                              const QuadRule& rule) {
  int total = 0;
  for (const MatrixPoly& f : factors) {
    if (f.dim() != params.dim()) throw ShapeError("integrate_weighted: size mismatch");
    total += f.degree();
  }
  const double bound = 1.0 + total;
  for (Complex x : spectrum(params.h())) {
    if (!(x.real() > bound)) {
      throw DomainError("integrate_weighted: integral diverges, need Re(x) > " +
                        std::to_string(bound) + " on spec(H)");
    }
  }
  for (Complex z : spectrum(params.c())) {
    if (!(z.real() > -1.0)) {
      throw DomainError("integrate_weighted: integral diverges at 0, need Re(z) > -1");
    }
  }
  QuadResult out;
  const Matrix coarse = integrate_once(params, factors, rule, total, nullptr);
  out.value = integrate_once(params, factors, rule.refined(), total, &out.abs_mass);
  out.error_estimate = (out.value - coarse).norm();
  return out;
}

}  // namespace biortho
