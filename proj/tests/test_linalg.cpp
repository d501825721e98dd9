#include "doctest.h"

#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/linalg.hpp"
#include "support.hpp"

using namespace biortho;
using testing::conjugated;
using testing::diag;

TEST_CASE("spectrum of a conjugated diagonal matrix") {
  const auto ev = spectrum(conjugated({3.0, Complex(-1.0, 0.5)}));
  REQUIRE(ev.size() == 2);
  CHECK(std::abs(ev[0] - Complex(-1.0, 0.5)) < 1e-13);
  CHECK(std::abs(ev[1] - 3.0) < 1e-13);
}

TEST_CASE("eigensystem reconstructs and rejects defective matrices") {
  const Matrix a = conjugated({2.0, 5.0});
  const Eigensystem es = eigensystem(a);
  CHECK((es.reconstruct() - a).norm() < 1e-13);

  Matrix jordan(2, 2);
  jordan << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(eigensystem(jordan), IllConditioned);
}

TEST_CASE("apply_scalar_function agrees with the matrix exponential series") {
  const Matrix a = conjugated({0.3, Complex(-0.2, 0.1)});
  Matrix series = identity(2), term = identity(2);
  for (int k = 1; k < 30; ++k) {
    term = term * a / static_cast<double>(k);
    series += term;
  }
  const Matrix viaf = apply_scalar_function(a, [](Complex z) { return std::exp(z); });
  CHECK((viaf - series).norm() < 1e-14);
}

TEST_CASE("apply_scalar_function reports non-finite results") {
  CHECK_THROWS_AS(apply_scalar_function(diag({0.0, 1.0}), [](Complex z) { return 1.0 / z; }), DomainError);
}

TEST_CASE("commute_defect and positive stability") {
  const Matrix a = conjugated({1.0, 2.0});
  const Matrix b = conjugated({-4.0, 0.5});
  CHECK(commute_defect(a, b) < 1e-14);
  Matrix c(2, 2);
  c << 0.0, 1.0, 0.0, 0.0;
  CHECK(commute_defect(a, c) > 1e-3);
  CHECK_THROWS_AS(require_commuting(a, c, "test"), CommutationError);
  CHECK(is_positive_stable(a));
  CHECK_FALSE(is_positive_stable(b));
}

TEST_CASE("joint eigensystem of commuting matrices with a repeated eigenvalue") {
  const Matrix a = conjugated({1.0, 1.0});
  const Matrix b = conjugated({2.0, 7.0});
  const Matrix mats[] = {a, b};
  const JointEigensystem js = joint_eigensystem(mats);
  const Matrix back = apply_joint_function(js, [](std::span<const Complex> ev) { return ev[0] * ev[1]; });
  CHECK((back - a * b).norm() < 1e-12);
}

TEST_CASE("inverse refuses singular matrices") {
  CHECK_THROWS_AS(inverse(diag({1.0, 0.0})), DomainError);
  const Matrix a = conjugated({2.0, Complex(0.0, 3.0)});
  CHECK((inverse(a) * a - identity(2)).norm() < 1e-14);
}
