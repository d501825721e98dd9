#include "biortho/matrix_poly.hpp"

#include <algorithm>
#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/special.hpp"

namespace biortho {

namespace {

constexpr double kTrimRel = 1e-14;

void trim(std::vector<Matrix>& c) {
  double top = 0.0;
  for (const Matrix& m : c) top = std::max(top, m.norm());
  while (c.size() > 1 && c.back().norm() <= kTrimRel * top) c.pop_back();
  if (c.size() == 1 && top == 0.0) c.front().setZero();
}

void require_same_dim(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.dim() != b.dim()) throw ShapeError("MatrixPoly: dimension mismatch");
}

}  // namespace

MatrixPoly::MatrixPoly(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeError("MatrixPoly: no coefficients");
  const Index p = coeffs_.front().rows();
  for (const Matrix& m : coeffs_) {
    require_square(m, "MatrixPoly");
    if (m.rows() != p) throw ShapeError("MatrixPoly: mixed coefficient sizes");
  }
  trim(coeffs_);
}

MatrixPoly MatrixPoly::zero(Index p) {
  return MatrixPoly({Matrix::Zero(p, p)});
}

MatrixPoly MatrixPoly::constant(Matrix a) { return MatrixPoly({std::move(a)}); }

MatrixPoly MatrixPoly::monomial(const Matrix& a, int k) {
  if (k < 0) throw DomainError("MatrixPoly::monomial: negative power");
  std::vector<Matrix> c(k + 1, Matrix::Zero(a.rows(), a.cols()));
  c[k] = a;
  return MatrixPoly(std::move(c));
}

bool MatrixPoly::is_zero() const {
  return coeffs_.size() == 1 && coeffs_.front().isZero(0.0);
}

Matrix MatrixPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Matrix::Zero(dim(), dim());
  return coeffs_[k];
}

Matrix MatrixPoly::operator()(Complex u) const {
  Matrix acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * u + coeffs_[k];
  return acc;
}

double MatrixPoly::abs_eval(double u) const {
  double acc = 0.0;
  const double a = std::abs(u);
  for (int k = degree(); k >= 0; --k) acc = acc * a + coeffs_[k].norm();
  return acc;
}

double MatrixPoly::max_coeff_norm() const {
  double top = 0.0;
  for (const Matrix& m : coeffs_) top = std::max(top, m.norm());
  return top;
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& other) {
  require_same_dim(*this, other);
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Matrix::Zero(dim(), dim()));
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim(coeffs_);
  return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& other) {
  require_same_dim(*this, other);
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Matrix::Zero(dim(), dim()));
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim(coeffs_);
  return *this;
}

MatrixPoly& MatrixPoly::operator*=(Complex s) {
  for (Matrix& m : coeffs_) m *= s;
  trim(coeffs_);
  return *this;
}

MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
MatrixPoly operator*(Complex s, MatrixPoly a) { return a *= s; }

MatrixPoly operator*(const Matrix& m, const MatrixPoly& a) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) {
    throw ShapeError("MatrixPoly: dimension mismatch");
  }
  std::vector<Matrix> c;
  c.reserve(a.coeffs().size());
  for (const Matrix& x : a.coeffs()) c.push_back(m * x);
  return MatrixPoly(std::move(c));
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  require_same_dim(a, b);
  const Index p = a.dim();
  std::vector<Matrix> c(a.degree() + b.degree() + 1, Matrix::Zero(p, p));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return MatrixPoly(std::move(c));
}

MatrixPoly derivative(const MatrixPoly& p) {
  if (p.degree() == 0) return MatrixPoly::zero(p.dim());
  std::vector<Matrix> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(static_cast<double>(k) * p.coeffs()[k]);
  return MatrixPoly(std::move(c));
}

MatrixPoly euler_apply(const MatrixPoly& p) {
  std::vector<Matrix> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back(static_cast<double>(k) * p.coeffs()[k]);
  return MatrixPoly(std::move(c));
}

MatrixPoly operator_pochhammer_apply(const MatrixPoly& p, const Matrix& b, int k) {
  if (b.rows() != p.dim() || b.cols() != p.dim()) {
    throw ShapeError("operator_pochhammer_apply: dimension mismatch");
  }
  for (const Matrix& a : p.coeffs()) {
    require_commuting(b, a, "operator_pochhammer_apply", 1e-10);
  }
  const Matrix id = identity(p.dim());
  std::vector<Matrix> c;
  for (int m = 0; m <= p.degree(); ++m) {
    c.push_back(pochhammer(b + static_cast<double>(m) * id, k) * p.coeffs()[m]);
  }
  return MatrixPoly(std::move(c));
}

MatrixPoly shift_degree(const MatrixPoly& p, int d) {
  if (d < 0) throw DomainError("shift_degree: negative shift");
  std::vector<Matrix> c(d, Matrix::Zero(p.dim(), p.dim()));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return MatrixPoly(std::move(c));
}

MatrixPoly antiderivative(const MatrixPoly& p) {
  std::vector<Matrix> c{Matrix::Zero(p.dim(), p.dim())};
  for (int k = 0; k <= p.degree(); ++k) {
    c.push_back(p.coeffs()[k] / static_cast<double>(k + 1));
  }
  return MatrixPoly(std::move(c));
}

MatrixPoly compose_power(const MatrixPoly& p, int power, Complex scale) {
  if (power < 1) throw DomainError("compose_power: power must be positive");
  std::vector<Matrix> c(p.degree() * power + 1, Matrix::Zero(p.dim(), p.dim()));
  Complex s = 1.0;
  for (int k = 0; k <= p.degree(); ++k) {
    c[k * power] = s * p.coeffs()[k];
    s *= scale;
  }
  return MatrixPoly(std::move(c));
}

double relative_difference(const MatrixPoly& a, const MatrixPoly& b) {
  require_same_dim(a, b);
  const int top = std::max(a.degree(), b.degree());
  double diff = 0.0;
  for (int k = 0; k <= top; ++k) diff = std::max(diff, (a.coeff(k) - b.coeff(k)).norm());
  const double scale = std::max({a.max_coeff_norm(), b.max_coeff_norm(), 1e-300});
  return diff / scale;
}

}  // namespace biortho
