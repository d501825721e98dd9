#pragma once

#include <span>
#include <vector>

#include "biortho/linalg.hpp"

namespace biortho {

/// Polynomial in a scalar variable with p x p complex matrix coefficients,
/// stored in the monomial basis. Trailing coefficients whose Frobenius norm
/// is below 1e-14 times the largest coefficient norm are trimmed, so the
/// zero polynomial is a single zero coefficient of degree 0.
class MatrixPoly {
 public:
  explicit MatrixPoly(std::vector<Matrix> coeffs);

  static MatrixPoly zero(Index p);
  static MatrixPoly constant(Matrix a);
  /// a u^k
  static MatrixPoly monomial(const Matrix& a, int k);

  Index dim() const { return coeffs_.front().rows(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const;

  std::span<const Matrix> coeffs() const { return coeffs_; }
  /// Coefficient of u^k; the zero matrix past the degree.
  Matrix coeff(int k) const;

  Matrix operator()(Complex u) const;

  /// sum_k ||A_k||_F |u|^k, the magnitude scale of a pointwise evaluation.
  double abs_eval(double u) const;

  double max_coeff_norm() const;

  MatrixPoly& operator+=(const MatrixPoly& other);
  MatrixPoly& operator-=(const MatrixPoly& other);
  MatrixPoly& operator*=(Complex s);

 private:
  std::vector<Matrix> coeffs_;
};

MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b);
MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b);
MatrixPoly operator*(Complex s, MatrixPoly a);
/// Left multiplication of every coefficient.
MatrixPoly operator*(const Matrix& m, const MatrixPoly& a);
/// Polynomial product (left factor's coefficients on the left).
MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);

MatrixPoly derivative(const MatrixPoly& p);

/// Euler operator u d/du: A_k u^k -> k A_k u^k.
MatrixPoly euler_apply(const MatrixPoly& p);

/// prod_{j<k} (u D + B + j I) applied to p; on monomials
/// A_m u^m -> (B + m I)_k A_m u^m. B must commute with every coefficient.
MatrixPoly operator_pochhammer_apply(const MatrixPoly& p, const Matrix& b,
                                     int k);

/// Multiplication by u^d.
MatrixPoly shift_degree(const MatrixPoly& p, int d);

/// Term-by-term antiderivative vanishing at u = 0.
MatrixPoly antiderivative(const MatrixPoly& p);

/// p(scale * u^power).
MatrixPoly compose_power(const MatrixPoly& p, int power, Complex scale);

/// max_k ||a_k - b_k||_F / max(||a||, ||b||, tiny) with ||.|| the largest
/// coefficient norm.
double relative_difference(const MatrixPoly& a, const MatrixPoly& b);

}  // namespace biortho
