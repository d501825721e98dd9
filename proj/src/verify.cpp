#include "biortho/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <thread>

#include "biortho/errors.hpp"
#include "biortho/family.hpp"
#include "biortho/gamma.hpp"
#include "biortho/identities.hpp"
#include "biortho/special.hpp"

namespace biortho {

namespace {

double sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

struct Triple {
  Matrix lhs;
  Matrix rhs;
  double mass = 0.0;
};

Triple finite_difference_terms(const Matrix& c, int upsilon, int j, int s) {
  require_square(c, "finite_difference_identity");
  if (upsilon < 1 || j < 0 || s < 0) {
    throw DomainError("finite_difference_identity: bad indices");
  }
  const Matrix id = identity(c.rows());
  Triple out;
  out.lhs = pochhammer(-static_cast<double>(j) * id, s);
  out.rhs = Matrix::Zero(c.rows(), c.rows());
  const Matrix base = static_cast<double>(1 + upsilon * j) * id + c;
  for (int m = 0; m <= s; ++m) {
    const Matrix ratio =
        log_gamma_ratio(c + static_cast<double>(m + 1 + upsilon * j) * id, base) / factorial(m);
    Matrix inner = Matrix::Zero(c.rows(), c.rows());
    double inner_mass = 0.0;
    for (int k = 0; k <= m; ++k) {
      const Matrix term = binomial(m, k) *
                          pochhammer((c + static_cast<double>(k + 1) * id) / static_cast<double>(upsilon), s);
      inner += sign(k) * term;
      inner_mass += term.norm();
    }
    out.rhs += ratio * inner;
    out.mass += ratio.norm() * inner_mass;
  }
  return out;
}

// Relative pointwise residual scaled by the absolute evaluation sum, so
// cancellation inside an alternating polynomial does not masquerade as error.
double pointwise_residual(const Matrix& a, const Matrix& b, double scale) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), scale, 1e-300});
}

VerificationReport error_report(IdentityId id, const std::string& digest,
                                const std::string& label, const std::exception& e) {
  return VerificationReport::make(id, digest, std::numeric_limits<double>::infinity(), 0.0,
                                  label + "; error: " + e.what());
}

double scalar_norm(double h, double c, int n) {
  return std::exp(std::lgamma(n + 1.0) + std::lgamma(h - n) + std::lgamma(c + n + 1.0) -
                  std::lgamma(h + c - n)) /
         (h - 2.0 * n - 1.0);
}

}  // namespace

Matrix weight_eval(double u, const Matrix& h, const Matrix& c) {
  if (!(u > 0.0)) throw DomainError("weight_eval: u must be positive");
  require_commuting(h, c, "weight_eval");
  const double lu = std::log(u);
  const double l1u = std::log1p(u);
  const Matrix a = apply_scalar_function(c, [lu](Complex z) { return std::exp(z * lu); });
  const Matrix b = apply_scalar_function(c + h, [l1u](Complex z) { return std::exp(-z * l1u); });
  return a * b;
}

QuadResult biorth_numeric(const ParamSet& params, int n, int s, const QuadRule& rule) {
  params.require_degree(std::max(n, s));
  const MatrixPoly factors[] = {m_first(params, n), m_second(params, s)};
  return integrate_weighted(params, factors, rule);
}

Matrix biorth_closed(const ParamSet& params, int n) {
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const Matrix gammas = apply_joint_function(params.joint(), [n, v](std::span<const Complex> ev) -> Complex {
    const Complex h = ev[0];
    const Complex c = ev[1];
    const Complex denom = h + c - static_cast<double>(n);
    if (scalar::is_gamma_pole(denom)) return 0.0;
    return std::exp(std::lgamma(n + 1.0) + scalar::lgamma(c + (v * n + 1.0)) +
                    scalar::lgamma(h - static_cast<double>(n)) - scalar::lgamma(denom));
  });
  return gammas * inverse(params.h() - id - static_cast<double>((v + 1) * n) * id);
}

QuadResult moment_first(const ParamSet& params, int n, int i, const QuadRule& rule) {
  if (i < 0 || i > n) throw DomainError("moment_first: need 0 <= i <= n");
  params.require_degree(n);
  const MatrixPoly factors[] = {m_first(params, n), MatrixPoly::monomial(identity(params.dim()), i)};
  return integrate_weighted(params, factors, rule);
}

QuadResult moment_second(const ParamSet& params, int n, int i, const QuadRule& rule) {
  if (i < 0 || i > n) throw DomainError("moment_second: need 0 <= i <= n");
  params.require_degree(n);
  const MatrixPoly factors[] = {m_second(params, n),
                                MatrixPoly::monomial(identity(params.dim()), params.upsilon() * i)};
  return integrate_weighted(params, factors, rule);
}

std::pair<Matrix, Matrix> finite_difference_identity(const Matrix& c, int upsilon, int j, int s) {
  Triple t = finite_difference_terms(c, upsilon, j, s);
  return {std::move(t.lhs), std::move(t.rhs)};
}

VerificationReport genfunc_check(const ParamSet& params, int which, int series_order, double u,
                                 double t) {
  if (which != 1 && which != 2) throw DomainError("genfunc_check: which must be 1 or 2");
  if (!(std::abs(t) < 0.5)) throw DomainError("genfunc_check: need |t| < 0.5");
  if (series_order < 0) throw DomainError("genfunc_check: negative order");
  const int v = params.upsilon();
  const Index p = params.dim();
  const Matrix id = identity(p);
  const Matrix& h = params.h();
  const Matrix& c = params.c();
  // The series terms are polynomial identities; no integrability bound applies.
  const ParamSet free = params.shifted(0.0, 0.0);

  Matrix lhs = Matrix::Zero(p, p);
  Matrix last = Matrix::Zero(p, p);
  for (int n = 0; n <= series_order; ++n) {
    const Matrix cpoch_inv = inverse(pochhammer(c + id, v * n));
    const double tn = std::pow(-t, n) / factorial(n);
    Matrix term;
    if (which == 1) {
      term = tn * cpoch_inv * pochhammer(id - h, n) * m_first(free, n)(u);
    } else {
      term = tn * cpoch_inv * m_first(params.shifted(static_cast<double>(n), 0.0), n)(u);
    }
    lhs += term;
    last = term;
  }

  Matrix rhs;
  std::string notes = fmt("u=%.17g t=%.17g order=%d; stated form", u, t, series_order);
  if (which == 1) {
    const double log1mt = std::log1p(-t);
    const Matrix power = apply_scalar_function(h, [log1mt](Complex z) { return std::exp((z - 1.0) * log1mt); });
    const double arg = t * (1.0 + v) / (t - 1.0) * std::pow(u * (1.0 + v) / (v * (t - 1.0)), v);
    const Matrix f = hypergeometric_pfq(delta_params(v + 1, id - h), delta_params(v, c + id), arg);
    rhs = power * f;
    notes += fmt(" (argument %.6g)", arg);
    if (v == 1) {
      // t^n coefficients of (1-t)^{h-1} 2F1((1-h)/2, (2-h)/2; c+1; 4tu/(1-t)^2)
      // per joint eigenpair, against the t^n terms of the left-hand series.
      double worst = 0.0;
      for (int n = 0; n <= series_order; ++n) {
        const Matrix an = apply_joint_function(free.joint(), [&](std::span<const Complex> ev) {
          const Complex hh = ev[0];
          const Complex cc = ev[1];
          Complex total = 0.0;
          for (int k = 0; k <= n; ++k) {
            Complex num = 1.0;
            for (int i = 0; i < 2 * k; ++i) num *= (1.0 - hh + static_cast<double>(i));
            Complex den = 1.0;
            for (int i = 0; i < k; ++i) den *= (cc + 1.0 + static_cast<double>(i));
            Complex tail = 1.0;
            for (int i = 0; i < n - k; ++i) tail *= (1.0 + 2.0 * k - hh + static_cast<double>(i));
            total += num / den / factorial(k) * std::pow(u, k) * tail / factorial(n - k);
          }
          return total;
        });
        const Matrix ln = sign(n) / factorial(n) * inverse(pochhammer(c + id, n)) * pochhammer(id - h, n) *
                          m_first(free, n)(u);
        worst = std::max(worst, (ln - an).norm() / std::max(an.norm(), 1e-300));
      }
      notes += fmt("; upsilon=1 coefficient oracle residual %.3g", worst);
    }
  } else {
    const Matrix f = hypergeometric_pfq(delta_params(v, id - h), delta_params(v, c + id), -t * std::pow(-u, v));
    rhs = std::exp(t) * f;
  }
  const double scale = std::max(rhs.norm(), 1e-300);
  const double residual = (lhs - rhs).norm() / scale;
  const double allowance = 10.0 * last.norm() / scale;
  notes += fmt("; truncation allowance 10*|last term| = %.3g", allowance);
  return VerificationReport::make(which == 1 ? IdentityId::genfunc1 : IdentityId::genfunc2,
                                  params.digest(), residual, allowance, std::move(notes));
}

std::vector<VerificationReport> scalar_reduction_suite(double h, double c, int n_max) {
  const ParamSet params = ParamSet::make(Matrix::Constant(1, 1, h), Matrix::Constant(1, 1, c), 1, n_max);
  const std::string digest = params.digest();
  const QuadRule rule = QuadRule::gauss_legendre(200);
  std::vector<VerificationReport> out;
  auto guarded = [&](const std::string& label, auto&& body) {
    try {
      out.push_back(body());
    } catch (const std::exception& e) {
      out.push_back(error_report(IdentityId::upsilon_one, digest, label, e));
    }
  };

  for (int n = 0; n <= n_max; ++n) {
    // Two scalar forms of the foMp: the Gamma-ratio sum
    //   (-1)^n C(n,l) Gamma(h-n)/Gamma(h-n-l) (-u)^l Gamma(c+1+n)/Gamma(c+1+l)
    // and (-1)^n Gamma(c+1+n) sum_l (-n)_l (n+1-h)_l x^l / (l! Gamma(c+1+l)),
    // which only agrees with the hypergeometric form for x = -u.
    const std::string label = fmt("foMp coefficients n=%d", n);
    guarded(label, [&] {
      const MatrixPoly m = m_first(params, n);
      std::vector<Matrix> ratio_form, series_form, stated;
      for (int l = 0; l <= n; ++l) {
        const double g = std::exp(std::lgamma(h - n) - std::lgamma(h - n - l) + std::lgamma(c + 1 + n) -
                                  std::lgamma(c + 1 + l));
        ratio_form.push_back(Matrix::Constant(1, 1, sign(n + l) * binomial(n, l) * g));
        double a = 1.0, b = 1.0;
        for (int i = 0; i < l; ++i) {
          a *= (-n + i);
          b *= (n + 1 - h + i);
        }
        const double val = sign(n) * std::exp(std::lgamma(c + 1 + n) - std::lgamma(c + 1 + l)) * a * b /
                           factorial(l);
        series_form.push_back(Matrix::Constant(1, 1, sign(l) * val));
        stated.push_back(Matrix::Constant(1, 1, val));
      }
      const double r = std::max(relative_difference(m, MatrixPoly(ratio_form)),
                                relative_difference(m, MatrixPoly(series_form)));
      return VerificationReport::make(
          IdentityId::upsilon_one, digest, r, 1e-10,
          label + fmt("; vs Gamma-ratio form and series in -u; series with u^l as displayed differs by %.3g",
                      relative_difference(m, MatrixPoly(stated))));
    });
  }

  for (int n = 0; n <= n_max; ++n) {
    const std::string label = fmt("closed norm n=%d vs scalar norm", n);
    guarded(label, [&] {
      const double ref = scalar_norm(h, c, n);
      const double got = biorth_closed(params, n)(0, 0).real();
      const double im = biorth_closed(params, n)(0, 0).imag();
      return VerificationReport::make(IdentityId::upsilon_one, digest,
                                      std::hypot(got - ref, im) / std::abs(ref), 1e-9, label);
    });
  }

  for (int n = 0; n <= n_max; ++n) {
    const std::string label = fmt("quadrature norm n=%d vs scalar norm", n);
    guarded(label, [&] {
      const double ref = scalar_norm(h, c, n);
      const QuadResult q = biorth_numeric(params, n, n, rule);
      return VerificationReport::make(IdentityId::upsilon_one, digest,
                                      std::abs(q.value(0, 0) - ref) / std::abs(ref), 1e-7, label);
    });
  }

  for (int n = 0; n <= n_max; ++n) {
    // u(1+u)M'' + (1+c-(h-2)u)M' - n(n+1-h)M = 0 with Richardson-extrapolated
    // central differences for the derivatives.
    const std::string label = fmt("scalar ODE by finite differences n=%d, 50 points", n);
    guarded(label, [&] {
      const MatrixPoly m = m_first(params, n);
      auto f = [&](double x) { return m(x)(0, 0).real(); };
      double worst = 0.0;
      for (int k = 0; k < 50; ++k) {
        const double x = 0.1 + 0.1 * k;
        const double step = 1e-2 * std::max(1.0, x);
        auto d1 = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
        auto d2 = [&](double s) { return (f(x + s) - 2 * f(x) + f(x - s)) / (s * s); };
        const double m1 = (4 * d1(step / 2) - d1(step)) / 3;
        const double m2 = (4 * d2(step / 2) - d2(step)) / 3;
        const double t1 = x * (1 + x) * m2;
        const double t2 = (1 + c - (h - 2) * x) * m1;
        const double t3 = -n * (n + 1 - h) * f(x);
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), m.abs_eval(x), 1e-300});
        worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
      }
      return VerificationReport::make(IdentityId::upsilon_one, digest, worst, 1e-7, label);
    });
  }

  for (int n = 0; n <= n_max; ++n) {
    for (int s = 0; s < n; ++s) {
      const std::string label = fmt("scalar orthogonality n=%d s=%d", n, s);
      guarded(label, [&] {
        const MatrixPoly factors[] = {m_first(params, n), m_first(params, s)};
        const QuadResult q = integrate_weighted(params, factors, rule);
        return VerificationReport::make(IdentityId::upsilon_one, digest, q.value.norm() / q.abs_mass, 1e-8,
                                        label + " (relative to integrand mass)");
      });
    }
  }

  for (int n = 1; n < n_max; ++n) {
    const double pa = (n + 1 - h) * (h - 2 * n);
    const double pu = (h - 2 - 2 * n) * (h - 1 - 2 * n) * (h - 2 * n);
    const double pb = -(h - 2 * n - 1) * (h * (c + 2 * n + 1) - 2 * n * (1 + n));
    const double pg = n * (c + n) * (h - 2 * (1 + n)) * (c + h - n);
    const std::string label = fmt("stated three-term relation n=%d (coefficient space)", n);
    guarded(label, [&] {
      const MatrixPoly up = m_first(params, n + 1);
      const MatrixPoly mid = m_first(params, n);
      const MatrixPoly down = m_first(params, n - 1);
      const MatrixPoly lhs = Complex(pa) * up + Complex(pu) * shift_degree(mid, 1) + Complex(pb) * mid;
      const MatrixPoly rhs = Complex(pg) * down;
      return VerificationReport::make(IdentityId::upsilon_one, digest, relative_difference(lhs, rhs), 1e-10,
                                      label);
    });
    const std::string qlabel = fmt("three-term coefficients from moment system n=%d", n);
    guarded(qlabel, [&] {
      const int idx[] = {n + 1, n, n - 1};
      std::vector<MatrixPoly> fam;
      for (int k : idx) fam.push_back(m_first(params, k));
      const MatrixPoly umid = shift_degree(fam[1], 1);
      Eigen::Matrix3cd gram;
      Eigen::Vector3cd rhs;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const MatrixPoly f[] = {fam[a], fam[b]};
          gram(a, b) = integrate_weighted(params, f, rule).value(0, 0);
        }
        const MatrixPoly f[] = {umid, fam[a]};
        rhs(a) = integrate_weighted(params, f, rule).value(0, 0);
      }
      const Eigen::Vector3cd coef = gram.fullPivLu().solve(rhs);
      // Stated relation rearranged: u M_n = -pa/pu M_{n+1} - pb/pu M_n + pg/pu M_{n-1}.
      const Eigen::Vector3cd stated(-pa / pu, -pb / pu, pg / pu);
      const double r = (coef - stated).norm() / stated.norm();
      return VerificationReport::make(
          IdentityId::upsilon_one, digest, r, 1e-6,
          qlabel + fmt("; recovered (%.10g, %.10g, %.10g) stated (%.10g, %.10g, %.10g)", coef(0).real(),
                       coef(1).real(), coef(2).real(), stated(0).real(), stated(1).real(),
                       stated(2).real()));
    });
  }
  return out;
}

std::vector<VerificationReport> run_suite(const ParamSet& params, const SuiteConfig& config) {
  const std::string digest = params.digest();
  const int max_n = config.max_n.value_or(params.bounded() ? params.max_degree() : 4);
  params.require_degree(max_n);
  const int v = params.upsilon();
  const Index p = params.dim();
  const Matrix id = identity(p);
  const QuadRule rule = QuadRule::gauss_legendre(config.quad_points, config.grading);
  auto selected = [&](IdentityId id_) {
    return config.identities.empty() || config.identities.count(id_) > 0;
  };
  auto tol = [&](double fallback) { return config.tol.value_or(fallback); };

  using Task = std::function<std::vector<VerificationReport>()>;
  std::vector<Task> tasks;
  auto add = [&](IdentityId which, std::string label, std::function<VerificationReport()> body) {
    if (!selected(which)) return;
    tasks.push_back([=]() -> std::vector<VerificationReport> {
      try {
        return {body()};
      } catch (const std::exception& e) {
        return {error_report(which, digest, label, e)};
      }
    });
  };

  add(IdentityId::weight_integral, "Lambda_00 vs weight integral", [=, &params] {
    const QuadResult q = biorth_numeric(params, 0, 0, rule);
    const Matrix w = weight_integral(params.h(), params.c());
    const Matrix stated = w * inverse(params.h() + params.c());
    const double r = (q.value - w).norm() / w.norm();
    return VerificationReport::make(
        IdentityId::weight_integral, digest, r, tol(1e-9),
        fmt("Lambda_00 vs B(H-I, C+I); stated form with extra (H+C)^{-1} has residual %.3g",
            (q.value - stated).norm() / q.value.norm()));
  });

  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= max_n; ++s) {
      const std::string label = fmt("n=%d s=%d", n, s);
      add(IdentityId::biorth, label, [=, &params] {
        const QuadResult q = biorth_numeric(params, n, s, rule);
        const Matrix closed = biorth_closed(params, std::max(n, s));
        std::string note = label;
        if (q.error_estimate > 1e-10 * closed.norm()) {
          note += fmt("; convergence warning: quadrature error estimate %.3g", q.error_estimate);
        }
        if (n == s) {
          return VerificationReport::make(IdentityId::biorth, digest, (q.value - closed).norm() / closed.norm(),
                                          tol(1e-7), note + "; diagonal vs closed form");
        }
        return VerificationReport::make(IdentityId::biorth, digest, q.value.norm() / closed.norm(), tol(1e-8),
                                        note + "; off-diagonal relative to closed form at max(n,s)");
      });
    }
  }

  for (IdentityId which : {IdentityId::moment_first, IdentityId::moment_second}) {
    for (int n = 0; n <= max_n; ++n) {
      for (int i = 0; i <= n; ++i) {
        const std::string label = fmt("n=%d i=%d", n, i);
        add(which, label, [=, &params] {
          const QuadResult q = which == IdentityId::moment_first ? moment_first(params, n, i, rule)
                                                                 : moment_second(params, n, i, rule);
          const double norm = q.value.norm();
          if (i < n) {
            return VerificationReport::make(which, digest, norm / q.abs_mass, tol(1e-8),
                                            label + "; zero branch, relative to integrand mass");
          }
          const double qerr = std::max(q.error_estimate, DBL_EPSILON * q.abs_mass);
          return VerificationReport::make(which, digest, 1e3 * qerr / norm, 1.0,
                                          label + fmt("; nonzero branch |moment| = %.6g, quadrature error %.3g", norm,
                                                      qerr));
        });
      }
    }
  }

  for (int n = 0; n <= max_n; ++n) {
    const std::string label = fmt("n=%d, 20 points on [0,10]", n);
    add(IdentityId::hypergeometric, label, [=, &params] {
      const MatrixPoly m = m_first(params, n);
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const double u = 10.0 * k / 19.0;
        worst = std::max(worst, pointwise_residual(m(u), m_first_hypergeometric(params, n, u), m.abs_eval(u)));
      }
      return VerificationReport::make(IdentityId::hypergeometric, digest, worst, tol(1e-9), label);
    });
  }

  for (int n = 0; n <= max_n; ++n) {
    const std::string label = fmt("n=%d", n);
    add(IdentityId::ode, label, [=, &params] {
      return VerificationReport::make(IdentityId::ode, digest, ode_identity(params, n).residual(), tol(1e-10),
                                      label + "; coefficient space");
    });
  }

  for (int n = 1; n <= max_n; ++n) {
    add(IdentityId::rec1, fmt("n=%d", n), [=, &params] {
      return VerificationReport::make(IdentityId::rec1, digest, rec1(params, n).residual(), tol(1e-9),
                                      fmt("n=%d", n));
    });
  }
  for (int n = 0; n <= max_n; ++n) {
    add(IdentityId::rec2, fmt("n=%d", n), [=, &params] {
      return VerificationReport::make(IdentityId::rec2, digest, rec2(params, n).residual(), tol(1e-9),
                                      fmt("n=%d", n));
    });
  }
  for (int n = 1; n <= max_n; ++n) {
    add(IdentityId::rec3, fmt("n=%d", n), [=, &params] {
      return VerificationReport::make(IdentityId::rec3, digest, rec3(params, n).residual(), tol(1e-9),
                                      fmt("n=%d", n));
    });
  }
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::string label = fmt("n=%d k=%d", n, k);
      add(IdentityId::rec4, label, [=, &params] {
        std::string note = label;
        if (v > 1 && k > 1) {
          note += "; as stated the k-fold form drops the product-rule terms of (-u)^{(upsilon-1)}";
        }
        return VerificationReport::make(IdentityId::rec4, digest, rec4(params, n, k).residual(), tol(1e-9), note);
      });
    }
  }

  add(IdentityId::genfunc1, "genfunc1", [=, &params] {
    return genfunc_check(params, 1, config.genfunc_order, config.genfunc_u, config.genfunc_t);
  });
  add(IdentityId::genfunc2, "genfunc2", [=, &params] {
    return genfunc_check(params, 2, config.genfunc_order, config.genfunc_u, config.genfunc_t);
  });

  for (int n = 0; n <= std::min(max_n, 3); ++n) {
    for (IntegralReading reading :
         {IntegralReading::antiderivative, IntegralReading::composed_bound, IntegralReading::adjusted}) {
      const char* name = reading == IntegralReading::antiderivative   ? "reading (i) antiderivative at x"
                         : reading == IntegralReading::composed_bound ? "reading (ii) antiderivative at (-x)^upsilon"
                                                                      : "adjusted form, shift H+(1+upsilon)I and "
                                                                        "prefactor (-1)^upsilon/(upsilon(n+1))";
      const std::string label = fmt("n=%d %s", n, name);
      add(IdentityId::integral_rep, label, [=, &params] {
        const double r1 = integral_representation(params, n, IntegralReading::antiderivative).residual();
        const double r2 = integral_representation(params, n, IntegralReading::composed_bound).residual();
        const double limit = tol(1e-9);
        std::string held = r1 <= limit && r2 <= limit ? "both stated readings hold"
                           : r1 <= limit              ? "stated reading (i) holds"
                           : r2 <= limit              ? "stated reading (ii) holds"
                                                      : "neither stated reading holds";
        const double r = reading == IntegralReading::antiderivative   ? r1
                         : reading == IntegralReading::composed_bound ? r2
                                                                      : integral_representation(params, n, reading).residual();
        return VerificationReport::make(IdentityId::integral_rep, digest, r, limit,
                                        label + fmt("; %s (residuals %.3g, %.3g)", held.c_str(), r1, r2));
      });
    }
  }

  for (int j = 0; j <= 4; ++j) {
    for (int s = 0; s <= 4; ++s) {
      const std::string label = fmt("j=%d s=%d", j, s);
      add(IdentityId::finite_difference, label, [=, &params] {
        const Triple t = finite_difference_terms(params.c(), v, j, s);
        const double scale = std::max({1.0, t.lhs.norm(), t.mass});
        return VerificationReport::make(IdentityId::finite_difference, digest, (t.lhs - t.rhs).norm() / scale,
                                        tol(1e-9), label + "; relative to term mass");
      });
    }
  }

  for (int n = 0; n <= max_n; ++n) {
    const std::string label = fmt("n=%d, 10 points", n);
    add(IdentityId::jacobi, label, [=, &params] {
      const MatrixPoly m = m_first(params, n);
      const ParamSet swapped = ParamSet::relaxed(params.c(), -params.h() - params.c(), v);
      double trip = 0.0;
      double routes = 0.0;
      for (int k = 0; k < 10; ++k) {
        const double u = 0.5 * k;
        const Matrix back = sign(n) * factorial(n) * jacobi_first(swapped, n, 2.0 * u + 1.0);
        trip = std::max(trip, pointwise_residual(m(u), back, m.abs_eval(u)));
        const double x = 2.0 * u + 1.0;
        const Matrix a = jacobi_first(params, n, x, JacobiRoute::substitution);
        const Matrix b = jacobi_first(params, n, x, JacobiRoute::hypergeometric);
        routes = std::max(routes, pointwise_residual(a, b, 0.0));
      }
      return VerificationReport::make(IdentityId::jacobi, digest, std::max(trip, routes), tol(1e-9),
                                      label + fmt("; round trip %.3g, substitution vs hypergeometric %.3g", trip,
                                                  routes));
    });
  }

  if (selected(IdentityId::upsilon_one) && v == 1) {
    if (p == 1 && std::abs(params.h()(0, 0).imag()) == 0.0 && std::abs(params.c()(0, 0).imag()) == 0.0) {
      const double h = params.h()(0, 0).real();
      const double c = params.c()(0, 0).real();
      tasks.push_back([=] {
        try {
          return scalar_reduction_suite(h, c, max_n);
        } catch (const std::exception& e) {
          return std::vector<VerificationReport>{
              error_report(IdentityId::upsilon_one, digest, "scalar reduction", e)};
        }
      });
    } else {
      for (int n = 0; n <= max_n; ++n) {
        const std::string label = fmt("matrix norm n=%d vs scalar norm per joint eigenvalue", n);
        add(IdentityId::upsilon_one, label, [=, &params] {
          const Matrix got = biorth_closed(params, n);
          const Matrix ref = apply_joint_function(params.joint(), [n](std::span<const Complex> ev) {
            const Complex h = ev[0];
            const Complex c = ev[1];
            return std::exp(scalar::lgamma(n + 1.0) + scalar::lgamma(h - static_cast<double>(n)) +
                            scalar::lgamma(c + (n + 1.0)) - scalar::lgamma(h + c - static_cast<double>(n))) /
                   (h - (2.0 * n + 1.0));
          });
          return VerificationReport::make(IdentityId::upsilon_one, digest, (got - ref).norm() / ref.norm(),
                                          tol(1e-9), label);
        });
      }
    }
  }

  std::vector<std::vector<VerificationReport>> results(tasks.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, tasks.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < tasks.size(); i += threads) results[i] = tasks[i]();
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<VerificationReport> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace biortho
