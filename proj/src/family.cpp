#include "biortho/family.hpp"

#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/special.hpp"

namespace biortho {

namespace {

double sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

unsigned __int128 binomial_exact(int n, int k) {
  if (n < 0 || n > 30 || k < 0 || k > n) {
    throw DomainError("binomial: arguments out of range (0 <= k <= n <= 30)");
  }
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return r;
}

double binomial(int n, int k) { return static_cast<double>(binomial_exact(n, k)); }

MatrixPoly m_first(const ParamSet& params, int n) {
  params.require_degree(n);
  const int v = params.upsilon();
  const Index p = params.dim();
  const Matrix id = identity(p);
  const Matrix a = static_cast<double>(n + 1) * id - params.h();
  std::vector<Matrix> coeffs(v * n + 1, Matrix::Zero(p, p));
  for (int j = 0; j <= n; ++j) {
    // (I+C)_{vn} ((I+C)_{vj})^{-1} = ((1+vj)I + C)_{v(n-j)}; the split form
    // needs no inverse and agrees wherever the inverse exists.
    const Matrix ratio = pochhammer(static_cast<double>(1 + v * j) * id + params.c(), v * (n - j));
    const double s = sign(j + n) * binomial(n, j) * sign(v * j);
    coeffs[v * j] = s * pochhammer(a, v * j) * ratio;
  }
  return MatrixPoly(std::move(coeffs));
}

Matrix m_first_hypergeometric(const ParamSet& params, int n, Complex u) {
  params.require_degree(n);
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  std::vector<Matrix> num{-static_cast<double>(n) * id};
  for (Matrix& m : delta_params(v, static_cast<double>(n + 1) * id - params.h())) {
    num.push_back(std::move(m));
  }
  const std::vector<Matrix> den = delta_params(v, params.c() + id);
  const Matrix f = hypergeometric_pfq(num, den, std::pow(-u, v));
  const Matrix g = log_gamma_ratio(params.c() + static_cast<double>(1 + v * n) * id, id + params.c());
  return sign(n) * f * g;
}

MatrixPoly m_second(const ParamSet& params, int n) {
  params.require_degree(n);
  const int v = params.upsilon();
  const Index p = params.dim();
  const Matrix id = identity(p);
  const Matrix hc = params.h() + params.c() - static_cast<double>(n) * id;
  std::vector<Matrix> coeffs(n + 1, Matrix::Zero(p, p));
  for (int s = 0; s <= n; ++s) {
    const Matrix hc_poch = pochhammer(hc, s);
    for (int j = 0; j <= s; ++j) {
      const Matrix cj = (static_cast<double>(j + 1) * id + params.c()) / static_cast<double>(v);
      const Matrix term = (sign(j + n) / factorial(s) * binomial(s, j)) * pochhammer(cj, n) * hc_poch;
      // u^s (1+u)^{n-s} = sum_r C(n-s, r) u^{s+r}
      for (int r = 0; r <= n - s; ++r) coeffs[s + r] += binomial(n - s, r) * term;
    }
  }
  return MatrixPoly(std::move(coeffs));
}

Matrix jacobi_first(const ParamSet& params, int n, Complex x, JacobiRoute route) {
  if (n < 0) throw DomainError("jacobi_first: negative degree");
  const Matrix& h = params.h();
  const Matrix& c = params.c();
  const int v = params.upsilon();
  const Matrix id = identity(params.dim());
  const double scale = sign(n) / factorial(n);
  if (route == JacobiRoute::substitution) {
    const ParamSet sub = ParamSet::relaxed(-h - c, h, v);
    return scale * m_first(sub, n)((x - 1.0) / 2.0);
  }
  std::vector<Matrix> num{-static_cast<double>(n) * id};
  for (Matrix& m : delta_params(v, c + h + static_cast<double>(n + 1) * id)) num.push_back(std::move(m));
  const std::vector<Matrix> den = delta_params(v, id + h);
  const Matrix g = log_gamma_ratio(static_cast<double>(1 + v * n) * id + h, h + id);
  const Matrix f = hypergeometric_pfq(num, den, std::pow((1.0 - x) / 2.0, v));
  return scale * sign(n) * g * f;
}

Matrix jacobi_second(const ParamSet& params, int n, Complex x) {
  if (n < 0) throw DomainError("jacobi_second: negative degree");
  const ParamSet sub = ParamSet::relaxed(-params.h() - params.c(), params.h(), params.upsilon());
  return (sign(n) / factorial(n)) * m_second(sub, n)((x - 1.0) / 2.0);
}

}  // namespace biortho
