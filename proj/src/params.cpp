#include "biortho/params.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "biortho/errors.hpp"
#include "biortho/gamma.hpp"

namespace biortho {

namespace {

void validate_shape(const Matrix& h, const Matrix& c, int upsilon) {
  if (h.rows() == 0 || h.rows() != h.cols() || c.rows() != c.cols() ||
      c.rows() != h.rows()) {
    throw ValidationError("dimension", "H and C must be square of equal size");
  }
  if (!h.allFinite() || !c.allFinite()) {
    throw ValidationError("finite", "H and C must have finite entries");
  }
  if (upsilon < 1) {
    throw ValidationError("upsilon", "upsilon must be a positive integer");
  }
}

JointEigensystem validate_structure(const Matrix& h, const Matrix& c,
                                    double cond_max) {
  const double defect = commute_defect(h, c);
  if (defect > kCommuteTol) {
    throw ValidationError("commute", "HC = CH violated (defect " +
                                         std::to_string(defect) + ")");
  }
  try {
    (void)eigensystem(h, cond_max);
    (void)eigensystem(c, cond_max);
  } catch (const IllConditioned& e) {
    throw ValidationError("diagonalizable", e.what());
  }
  try {
    const Matrix mats[] = {h, c};
    return joint_eigensystem(mats, 1e-9, cond_max);
  } catch (const IllConditioned& e) {
    throw ValidationError("simultaneous", e.what());
  }
}

void append_matrix(std::ostringstream& os, const Matrix& m) {
  char buf[64];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g;", m(i, j).real(),
                    m(i, j).imag());
      os << buf;
    }
  }
}

}  // namespace

ParamSet::ParamSet(Matrix h, Matrix c, int upsilon, int max_degree,
                   JointEigensystem joint)
    : h_(std::move(h)),
      c_(std::move(c)),
      upsilon_(upsilon),
      max_degree_(max_degree),
      joint_(std::move(joint)) {}

ParamSet ParamSet::make(Matrix h, Matrix c, int upsilon, int max_degree,
                        double cond_max) {
  validate_shape(h, c, upsilon);
  if (max_degree < 0) {
    throw ValidationError("max_degree", "max_degree must be nonnegative");
  }
  JointEigensystem js = validate_structure(h, c, cond_max);
  for (Complex z : spectrum(c)) {
    if (!(z.real() > -1.0)) {
      throw ValidationError("spectrum_C", "every eigenvalue z of C needs Re(z) > -1");
    }
  }
  const double bound = 1.0 + (1.0 + upsilon) * max_degree;
  for (Complex x : spectrum(h)) {
    if (!(x.real() > bound)) {
      throw ValidationError("spectrum_H",
                            "every eigenvalue x of H needs Re(x) > 1 + (1 + upsilon) N = " +
                                std::to_string(bound));
    }
  }
  return ParamSet(std::move(h), std::move(c), upsilon, max_degree, std::move(js));
}

ParamSet ParamSet::relaxed(Matrix h, Matrix c, int upsilon) {
  validate_shape(h, c, upsilon);
  JointEigensystem js = validate_structure(h, c, kDefaultCondMax);
  for (Complex z : spectrum(c)) {
    if (scalar::is_gamma_pole(z + 1.0)) {
      throw ValidationError("gamma_pole", "C + I has an eigenvalue at a pole of Gamma");
    }
  }
  return ParamSet(std::move(h), std::move(c), upsilon, -1, std::move(js));
}

ParamSet ParamSet::shifted(Complex dh, Complex dc) const {
  const Matrix id = identity(dim());
  return relaxed(h_ + dh * id, c_ + dc * id, upsilon_);
}

void ParamSet::require_degree(int n) const {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (bounded() && n > max_degree_) {
    throw DomainError("degree " + std::to_string(n) + " exceeds max_degree " +
                      std::to_string(max_degree_));
  }
}

std::string ParamSet::canonical() const {
  std::ostringstream os;
  os << "p=" << dim() << "|upsilon=" << upsilon_ << "|N=" << max_degree_ << "|H=";
  append_matrix(os, h_);
  os << "|C=";
  append_matrix(os, c_);
  return os.str();
}

std::string ParamSet::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace biortho
