#pragma once

#include <string>

#include "biortho/linalg.hpp"

namespace biortho {

/// Parameter triple (H, C, upsilon) with maximal degree N.
///
/// `make` enforces the full spectral conditions: HC = CH, Re(z) > -1 on
/// spec(C), Re(x) > 1 + (1 + upsilon) N on spec(H), both matrices
/// diagonalizable and simultaneously so. `relaxed` drops the two spectral
/// bounds (the recurrences and the Jacobi substitution shift parameters far
/// outside them) and instead only keeps Gamma(C + I) pole free.
class ParamSet {
 public:
  static ParamSet make(Matrix h, Matrix c, int upsilon, int max_degree,
                       double cond_max = kDefaultCondMax);
  static ParamSet relaxed(Matrix h, Matrix c, int upsilon);

  const Matrix& h() const { return h_; }
  const Matrix& c() const { return c_; }
  int upsilon() const { return upsilon_; }
  /// Degree bound; -1 for relaxed sets, which carry none.
  int max_degree() const { return max_degree_; }
  bool bounded() const { return max_degree_ >= 0; }
  Index dim() const { return h_.rows(); }

  /// Joint eigenbasis of (H, C); values[0] from H, values[1] from C.
  const JointEigensystem& joint() const { return joint_; }

  /// Relaxed copy with (H + dh I, C + dc I).
  ParamSet shifted(Complex dh, Complex dc) const;

  /// Throws DomainError if this set is bounded and n exceeds max_degree.
  void require_degree(int n) const;

  /// Canonical text form used for digests (17 significant digits).
  std::string canonical() const;
  /// 16 hex digit FNV-1a hash of `canonical()`.
  std::string digest() const;

 private:
  ParamSet(Matrix h, Matrix c, int upsilon, int max_degree,
           JointEigensystem joint);

  Matrix h_;
  Matrix c_;
  int upsilon_;
  int max_degree_;
  JointEigensystem joint_;
};

}  // namespace biortho
