#include "biortho/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "biortho/errors.hpp"

namespace biortho {

namespace {

// rcond alone misses exact zero pivots, which it reports as well conditioned.
bool near_singular(const Eigen::PartialPivLU<Matrix>& lu) {
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  return !(lu.rcond() > 1e-14) || !(pivots.minCoeff() > 1e-14 * pivots.maxCoeff());
}

bool eigen_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double condition_number(const Matrix& v) {
  Eigen::JacobiSVD<Matrix> svd(v);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

// Eigen's ComplexEigenSolver leaves eigenvalues in Schur order; sort them and
// carry the eigenvector columns along.
void sort_eigenpairs(Vector& values, Matrix& vectors) {
  std::vector<Index> order(values.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return eigen_less(values(a), values(b));
  });
  Vector v2(values.size());
  Matrix m2(vectors.rows(), vectors.cols());
  for (Index i = 0; i < values.size(); ++i) {
    v2(i) = values(order[i]);
    m2.col(i) = vectors.col(order[i]);
  }
  values = std::move(v2);
  vectors = std::move(m2);
}

}  // namespace

Matrix identity(Index p) { return Matrix::Identity(p, p); }

void require_square(const Matrix& m, std::string_view what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw NumericalFailure(std::string(what) + ": non-finite entry");
  }
}

double frobenius(const Matrix& m) { return m.norm(); }

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  Eigen::PartialPivLU<Matrix> lu(m);
  if (near_singular(lu)) throw DomainError("inverse: matrix is singular");
  return lu.inverse();
}

Matrix solve(const Matrix& m, const Matrix& rhs) {
  require_square(m, "solve");
  Eigen::PartialPivLU<Matrix> lu(m);
  if (near_singular(lu)) throw DomainError("solve: matrix is singular");
  return lu.solve(rhs);
}

Matrix Eigensystem::reconstruct() const {
  return vectors * values.asDiagonal() * inverse;
}

std::vector<Complex> spectrum(const Matrix& m) {
  require_square(m, "spectrum");
  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("spectrum: eigensolver did not converge");
  }
  std::vector<Complex> out(solver.eigenvalues().begin(),
                           solver.eigenvalues().end());
  std::stable_sort(out.begin(), out.end(), eigen_less);
  return out;
}

Eigensystem eigensystem(const Matrix& m, double cond_max) {
  require_square(m, "eigensystem");
  Eigen::ComplexEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("eigensystem: eigensolver did not converge");
  }
  Eigensystem es;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  for (Index j = 0; j < es.vectors.cols(); ++j) es.vectors.col(j).normalize();
  sort_eigenpairs(es.values, es.vectors);
  es.cond = condition_number(es.vectors);
  if (!(es.cond <= cond_max)) {
    throw IllConditioned("eigensystem: eigenvector condition number " +
                         std::to_string(es.cond) + " exceeds " +
                         std::to_string(cond_max) +
                         " (matrix not safely diagonalizable)");
  }
  es.inverse = es.vectors.inverse();
  return es;
}

Matrix apply_scalar_function(const Matrix& m, const ScalarFn& f,
                             double cond_max) {
  const Eigensystem es = eigensystem(m, cond_max);
  Vector fv(es.values.size());
  for (Index i = 0; i < fv.size(); ++i) {
    fv(i) = f(es.values(i));
    if (!std::isfinite(fv(i).real()) || !std::isfinite(fv(i).imag())) {
      throw DomainError("apply_scalar_function: eigenvalue outside the domain");
    }
  }
  return es.vectors * fv.asDiagonal() * es.inverse;
}

double commute_defect(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ShapeError("commute_defect: dimension mismatch");
  }
  const double scale = std::max(1.0, a.norm() * b.norm());
  return (a * b - b * a).norm() / scale;
}

void require_commuting(const Matrix& a, const Matrix& b, std::string_view what,
                       double tol) {
  const double d = commute_defect(a, b);
  if (d > tol) {
    throw CommutationError(std::string(what) + ": parameters do not commute (" +
                           std::to_string(d) + ")");
  }
}

bool is_positive_stable(const Matrix& m) {
  const auto ev = spectrum(m);
  return std::all_of(ev.begin(), ev.end(),
                     [](Complex z) { return z.real() > 0.0; });
}

JointEigensystem joint_eigensystem(std::span<const Matrix> mats, double tol,
                                   double cond_max) {
  if (mats.empty()) throw ShapeError("joint_eigensystem: no matrices");
  const Index p = mats.front().rows();
  // Fixed irrational weights keep distinct joint eigenvalues from colliding
  // in the combination.
  static constexpr double kWeights[] = {1.0, 0.6180339887498949,
                                        0.4142135623730951, 0.7320508075688772,
                                        0.2360679774997897};
  Matrix combo = Matrix::Zero(p, p);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    require_square(mats[k], "joint_eigensystem");
    if (mats[k].rows() != p) throw ShapeError("joint_eigensystem: mixed sizes");
    const double w = kWeights[k % std::size(kWeights)] *
                     (1.0 + 0.1 * static_cast<double>(k / std::size(kWeights)));
    combo += (w / std::max(1.0, mats[k].norm())) * mats[k];
  }
  for (std::size_t a = 0; a < mats.size(); ++a) {
    for (std::size_t b = a + 1; b < mats.size(); ++b) {
      require_commuting(mats[a], mats[b], "joint_eigensystem");
    }
  }
  const Eigensystem es = eigensystem(combo, cond_max);
  JointEigensystem js;
  js.vectors = es.vectors;
  js.inverse = es.inverse;
  js.cond = es.cond;
  for (const Matrix& m : mats) {
    Matrix d = js.inverse * m * js.vectors;
    const Vector diag = d.diagonal();
    d.diagonal().setZero();
    if (d.norm() > tol * std::max(1.0, m.norm()) * js.cond) {
      throw IllConditioned(
          "joint_eigensystem: matrices are not simultaneously diagonalizable");
    }
    js.values.push_back(diag);
  }
  return js;
}

Matrix apply_joint_function(const JointEigensystem& js, const JointFn& f) {
  const Index p = js.dim();
  Vector fv(p);
  std::vector<Complex> args(js.values.size());
  for (Index i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < args.size(); ++k) args[k] = js.values[k](i);
    fv(i) = f(args);
    if (!std::isfinite(fv(i).real()) || !std::isfinite(fv(i).imag())) {
      throw DomainError("apply_joint_function: value is not finite");
    }
  }
  return js.vectors * fv.asDiagonal() * js.inverse;
}

}  // namespace biortho
