#include "doctest.h"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/special.hpp"
#include "support.hpp"

using namespace biortho;
using testing::conjugated;
using testing::diag;
using testing::scalar;

namespace {

// int_0^inf u^v (1+u)^{-(s+v)} du by double-exponential quadrature.
double weight_moment(double s, double v) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([=](double u) { return std::exp(v * std::log(u) - (s + v) * std::log1p(u)); });
}

double beta_quad(double s, double v) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate([=](double t) { return std::pow(t, s - 1) * std::pow(1 - t, v - 1); }, 0.0, 1.0);
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK((pochhammer(diag({2.0, 3.0}), 0) - identity(2)).norm() == 0.0);
  CHECK(std::abs(pochhammer(scalar(-2.0), 2)(0, 0) - 2.0) < 1e-15);
  CHECK(pochhammer(scalar(-2.0), 3).norm() == 0.0);
  CHECK(std::abs(pochhammer(scalar(0.5), 3)(0, 0) - 0.5 * 1.5 * 2.5) < 1e-15);
}

TEST_CASE("pochhammer equals the Gamma ratio") {
  const Matrix s = conjugated({Complex(1.3, 0.2), 2.7});
  for (int k = 0; k <= 6; ++k) {
    const Matrix ratio = gamma_matrix(s + static_cast<double>(k) * identity(2)) * gamma_matrix_inv(s);
    const Matrix poch = pochhammer(s, k);
    CHECK((ratio - poch).norm() <= 1e-12 * poch.norm());
    const Matrix lr = log_gamma_ratio(s + static_cast<double>(k) * identity(2), s);
    CHECK((lr - poch).norm() <= 1e-12 * poch.norm());
  }
}

TEST_CASE("gamma_matrix_inv is singular exactly at poles") {
  const Matrix g = gamma_matrix_inv(diag({-2.0, 1.5}));
  CHECK(std::abs(g(0, 0)) == 0.0);
  CHECK(std::abs(g(1, 1) - 1.0 / std::tgamma(1.5)) < 1e-14);
  CHECK_THROWS_AS(gamma_matrix(diag({-2.0, 1.5})), DomainError);
}

TEST_CASE("beta_matrix against quadrature") {
  const double ss[] = {0.7, 2.5}, vs[] = {1.4, 3.2};
  const Matrix b = beta_matrix(conjugated({ss[0], ss[1]}), conjugated({vs[0], vs[1]}));
  const Matrix ref = conjugated({beta_quad(ss[0], vs[0]), beta_quad(ss[1], vs[1])});
  CHECK((b - ref).norm() <= 1e-10 * ref.norm());
  CHECK_THROWS_AS(beta_matrix(diag({-0.5, 1.0}), identity(2)), DomainError);
}

TEST_CASE("weight_integral against quadrature") {
  // int_0^inf (1+u)^{-3} du = 1/2
  CHECK(std::abs(weight_integral(scalar(3.0), scalar(0.0))(0, 0) - 0.5) < 1e-14);
  const double hs[] = {11.3, 15.2}, cs[] = {0.4, -0.45};
  const Matrix w = weight_integral(conjugated({hs[0], hs[1]}), conjugated({cs[0], cs[1]}), 4);
  const Matrix ref = conjugated({weight_moment(hs[0], cs[0]), weight_moment(hs[1], cs[1])});
  CHECK((w - ref).norm() <= 1e-9 * ref.norm());
  CHECK_THROWS_AS(weight_integral(scalar(5.0), scalar(0.0), 4), DomainError);
  CHECK_THROWS_AS(weight_integral(scalar(12.0), scalar(-1.5), 4), DomainError);
}

TEST_CASE("hypergeometric_pfq against Boost for scalar parameters") {
  const Matrix a[] = {scalar(0.3), scalar(1.7)};
  const Matrix b[] = {scalar(2.4)};
  const double ref = boost::math::hypergeometric_pFq({0.3, 1.7}, {2.4}, 0.45);
  CHECK(std::abs(hypergeometric_pfq(a, b, 0.45)(0, 0) - ref) < 1e-13);
  CHECK(std::abs(ref - 1.1274944704840047) < 1e-14);

  const Matrix a3[] = {scalar(0.5), scalar(0.8), scalar(1.1)};
  const Matrix b3[] = {scalar(1.9), scalar(2.2)};
  CHECK(std::abs(hypergeometric_pfq(a3, b3, -0.6)(0, 0) - 0.94607916830919056) < 1e-13);
}

TEST_CASE("hypergeometric_pfq termination and divergence") {
  // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
  const Matrix bm = conjugated({0.6, 1.3});
  const Matrix cm = conjugated({2.2, 3.1});
  const Matrix num[] = {-2.0 * identity(2), bm};
  const Matrix den[] = {cm};
  const Complex z = 3.0;
  const Matrix cinv = inverse(cm);
  const Matrix ref = identity(2) - 2.0 * z * bm * cinv +
                     z * z * bm * (bm + identity(2)) * inverse(cm * (cm + identity(2)));
  CHECK((hypergeometric_pfq(num, den, z) - ref).norm() < 1e-13 * ref.norm());

  const Matrix free[] = {bm};
  CHECK_THROWS_AS(hypergeometric_pfq(free, den, 1.5), DivergenceError);
  CHECK((hypergeometric_pfq(free, den, 0.0) - identity(2)).norm() == 0.0);
}

TEST_CASE("hypergeometric_pfq requires commuting parameters") {
  Matrix nc(2, 2);
  nc << 1.0, 1.0, 0.0, 2.0;
  const Matrix num[] = {nc};
  const Matrix den[] = {diag({3.0, 4.0})};
  CHECK_THROWS_AS(hypergeometric_pfq(num, den, 0.1), CommutationError);
}

TEST_CASE("delta_params") {
  const Matrix y = diag({1.0, 2.0});
  const auto d = delta_params(3, y);
  REQUIRE(d.size() == 3);
  CHECK((d[2] - (y + 2.0 * identity(2)) / 3.0).norm() < 1e-15);
  CHECK_THROWS(delta_params(0, y));
}
