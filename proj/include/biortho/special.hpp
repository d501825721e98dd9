#pragma once

#include <span>
#include <vector>

#include "biortho/linalg.hpp"

namespace biortho {

/// (S)_k = S (S + I) ... (S + (k-1) I), with (S)_0 = I.
Matrix pochhammer(const Matrix& s, int k);

/// Gamma(S) by functional calculus. DomainError if an eigenvalue is a pole.
Matrix gamma_matrix(const Matrix& s);

/// 1/Gamma lifted to S; defined for every diagonalizable S and singular
/// exactly when S has an eigenvalue at a pole of Gamma.
Matrix gamma_matrix_inv(const Matrix& s);

/// Gamma(A) Gamma^{-1}(B) for commuting A, B, evaluated as
/// exp(lgamma(a) - lgamma(b)) over the joint spectrum so that large real
/// parts do not overflow.
Matrix log_gamma_ratio(const Matrix& a, const Matrix& b);

/// Beta(S, V) = Gamma^{-1}(V + S) Gamma(V) Gamma(S) for commuting positive
/// stable S, V.
Matrix beta_matrix(const Matrix& s, const Matrix& v);

/// The weight moment  int_0^inf u^V (1 + u)^{-(S + V)} du  = B(S - I, V + I).
/// Requires Re(v) > -1 on spec(V) and Re(s) > 2 * max_degree + 1 on spec(S).
Matrix weight_integral(const Matrix& s, const Matrix& v, int max_degree = 0);

struct PfqOptions {
  int max_terms = 500;
  double tol = 1e-14;
};

/// Matrix-parameter generalized hypergeometric series
///   sum_j (N_1)_j ... (N_m)_j [(D_1)_j ... (D_q)_j]^{-1} z^j / j!
/// built with the term-ratio recursion. A numerator equal to -nI makes the
/// series terminate after n + 1 terms; otherwise |z| < 1 is required.
Matrix hypergeometric_pfq(std::span<const Matrix> numerators,
                          std::span<const Matrix> denominators, Complex z,
                          const PfqOptions& opts = {});

/// [Y/k, (Y + I)/k, ..., (Y + (k-1) I)/k].
std::vector<Matrix> delta_params(int k, const Matrix& y);

}  // namespace biortho
