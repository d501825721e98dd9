#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "biortho/params.hpp"
#include "biortho/quadrature.hpp"
#include "biortho/report.hpp"

namespace biortho {

/// W(u, H, C) = u^C (1+u)^{-(C+H)}.
Matrix weight_eval(double u, const Matrix& h, const Matrix& c);

/// Lambda_ns = int W M_n (second family)_s du.
QuadResult biorth_numeric(const ParamSet& params, int n, int s,
                          const QuadRule& rule);

/// n! Gamma^{-1}(H+C-nI) Gamma(C+(un+1)I) Gamma(H-nI) (H-I-(u+1)nI)^{-1}.
Matrix biorth_closed(const ParamSet& params, int n);

/// int W M_n u^i du. Needs Re(x) > 1 + u n + i on spec(H).
QuadResult moment_first(const ParamSet& params, int n, int i,
                        const QuadRule& rule);

/// int W (second family)_n u^{u i} du. Needs Re(x) > 1 + n + u i.
QuadResult moment_second(const ParamSet& params, int n, int i,
                         const QuadRule& rule);

/// (lhs, rhs) of the finite-difference identity behind biorthogonality:
/// (-jI)_s = sum_m Gamma^{-1}((1+uj)I+C) Gamma(C+(m+1+uj)I)/m!
///           sum_k (-1)^k C(m,k) ((1/u)(C+(k+1)I))_s.
std::pair<Matrix, Matrix> finite_difference_identity(const Matrix& c,
                                                     int upsilon, int j,
                                                     int s);

/// Generating-function comparison at (u, t); `which` is 1 or 2.
VerificationReport genfunc_check(const ParamSet& params, int which,
                                 int series_order, double u, double t);

/// p = 1, upsilon = 1 instances checked against independently coded scalar
/// formulas for the finite orthogonal polynomials.
std::vector<VerificationReport> scalar_reduction_suite(double h, double c,
                                                       int n_max);

struct SuiteConfig {
  /// Overrides every identity tolerance when set.
  std::optional<double> tol;
  int quad_points = 200;
  int grading = 6;
  /// Defaults to the parameter set's max degree.
  std::optional<int> max_n;
  /// Empty means all identities.
  std::set<IdentityId> identities;
  unsigned threads = 1;
  double genfunc_u = 0.3;
  double genfunc_t = 0.1;
  int genfunc_order = 5;
};

/// Runs every selected check; failures are recorded, never thrown. Output
/// is ordered by identity then grid index regardless of threading.
std::vector<VerificationReport> run_suite(const ParamSet& params,
                                          const SuiteConfig& config = {});

}  // namespace biortho
