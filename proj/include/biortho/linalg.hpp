#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace biortho {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Scalar holomorphic function lifted by `apply_scalar_function`. It may throw
/// DomainError for arguments outside its domain.
using ScalarFn = std::function<Complex(Complex)>;

inline constexpr double kDefaultCondMax = 1e8;

/// Relative commutator bound below which two matrices are treated as commuting.
inline constexpr double kCommuteTol = 1e-12;

Matrix identity(Index p);

/// Throws ShapeError unless `m` is square and non-empty, NumericalFailure on
/// NaN/Inf entries.
void require_square(const Matrix& m, std::string_view what);

double frobenius(const Matrix& m);

/// Inverse through LU; DomainError when the reciprocal condition estimate
/// falls below 1e-14.
Matrix inverse(const Matrix& m);

/// Solve m * x = rhs with the same singularity guard as `inverse`.
Matrix solve(const Matrix& m, const Matrix& rhs);

struct Eigensystem {
  Vector values;   // sorted by real part, then imaginary part
  Matrix vectors;  // columns are unit eigenvectors
  Matrix inverse;
  double cond = 1.0;  // 2-norm condition number of `vectors`

  Matrix reconstruct() const;
};

/// All eigenvalues with multiplicity, in deterministic order.
std::vector<Complex> spectrum(const Matrix& m);

Eigensystem eigensystem(const Matrix& m, double cond_max = kDefaultCondMax);

/// V diag(f(lambda_i)) V^{-1} for diagonalizable `m`.
Matrix apply_scalar_function(const Matrix& m, const ScalarFn& f,
                             double cond_max = kDefaultCondMax);

/// ||AB - BA||_F / max(1, ||A||_F ||B||_F).
double commute_defect(const Matrix& a, const Matrix& b);

/// Throws CommutationError naming `what` if the pair fails to commute.
void require_commuting(const Matrix& a, const Matrix& b, std::string_view what,
                       double tol = kCommuteTol);

bool is_positive_stable(const Matrix& m);

/// Common eigenbasis of a family of commuting diagonalizable matrices.
/// values[k][i] is the i-th eigenvalue of the k-th matrix in that basis.
struct JointEigensystem {
  Matrix vectors;
  Matrix inverse;
  std::vector<Vector> values;
  double cond = 1.0;

  Index dim() const { return vectors.rows(); }
};

/// Diagonalizes a fixed generic combination of `mats` and checks that every
/// member becomes diagonal in that basis (off-diagonal mass <= tol, scaled
/// by the matrix norm and the basis condition number).
JointEigensystem joint_eigensystem(std::span<const Matrix> mats,
                                   double tol = 1e-9,
                                   double cond_max = kDefaultCondMax);

using JointFn = std::function<Complex(std::span<const Complex>)>;

/// V diag(f(a_i, b_i, ...)) V^{-1} over the joint spectrum.
Matrix apply_joint_function(const JointEigensystem& js, const JointFn& f);

}  // namespace biortho
