#pragma once

#include <cstdint>

#include "biortho/matrix_poly.hpp"
#include "biortho/params.hpp"

namespace biortho {

/// Exact binomial coefficient; DomainError for n > 30 or k outside [0, n].
unsigned __int128 binomial_exact(int n, int k);
double binomial(int n, int k);

/// First family: degree upsilon * n, only powers u^{upsilon j} present.
///   sum_j (-1)^{j+n} C(n,j) ((n+1)I - H)_{uj} (I+C)_{un} ((I+C)_{uj})^{-1}
///         (-u)^{uj}
MatrixPoly m_first(const ParamSet& params, int n);

/// Same polynomial evaluated from its terminating hypergeometric form
///   (-1)^n  F(-nI, Delta(u, (n+1)I - H); Delta(u, C+I); (-u)^u)
///         Gamma^{-1}(I+C) Gamma(C + (1 + u n) I).
Matrix m_first_hypergeometric(const ParamSet& params, int n, Complex u);

/// Second family, degree n: the double sum over s, j of
///   (-1)^{j+n}/s! C(s,j) ((1/u)((j+1)I + C))_n (H + C - nI)_s u^s (1+u)^{n-s}.
MatrixPoly m_second(const ParamSet& params, int n);

enum class JacobiRoute { substitution, hypergeometric };

/// J_n^{(H,C)}(x) = ((-1)^n / n!) M_n^{(-H-C, H)}((x - 1)/2), or the
/// equivalent hypergeometric form.
Matrix jacobi_first(const ParamSet& params, int n, Complex x,
                    JacobiRoute route = JacobiRoute::substitution);

/// K_n^{(H,C)}(x) = ((-1)^n / n!) second-family M_n^{(-H-C, H)}((x - 1)/2).
Matrix jacobi_second(const ParamSet& params, int n, Complex x);

}  // namespace biortho
