#include "biortho/special.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "biortho/errors.hpp"
#include "biortho/gamma.hpp"

namespace biortho {

namespace {

// A numerator equal to -nI (n >= 0) annihilates every term past j = n.
std::optional<int> terminating_order(const Matrix& m) {
  const Complex d = m(0, 0);
  const double n = std::round(-d.real());
  if (n < 0.0 || std::abs(d.imag()) > 1e-12) return std::nullopt;
  const Matrix diff = m + n * identity(m.rows());
  if (diff.norm() > 1e-12 * std::max(1.0, n)) return std::nullopt;
  return static_cast<int>(n);
}

JointEigensystem joint_pair(const Matrix& a, const Matrix& b,
                            std::string_view what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows()) throw ShapeError(std::string(what) + ": size mismatch");
  require_commuting(a, b, what);
  const Matrix mats[] = {a, b};
  return joint_eigensystem(mats);
}

}  // namespace

Matrix pochhammer(const Matrix& s, int k) {
  require_square(s, "pochhammer");
  if (k < 0) throw DomainError("pochhammer: negative order");
  const Index p = s.rows();
  Matrix out = identity(p);
  for (int i = 0; i < k; ++i) {
    out = out * (s + static_cast<double>(i) * identity(p));
  }
  return out;
}

Matrix gamma_matrix(const Matrix& s) {
  require_square(s, "gamma_matrix");
  return apply_scalar_function(s, [](Complex z) { return scalar::gamma(z); });
}

Matrix gamma_matrix_inv(const Matrix& s) {
  require_square(s, "gamma_matrix_inv");
  return apply_scalar_function(s, [](Complex z) { return scalar::rgamma(z); });
}

Matrix log_gamma_ratio(const Matrix& a, const Matrix& b) {
  const JointEigensystem js = joint_pair(a, b, "log_gamma_ratio");
  return apply_joint_function(js, [](std::span<const Complex> ev) -> Complex {
    if (scalar::is_gamma_pole(ev[1])) {
      if (scalar::is_gamma_pole(ev[0])) {
        throw DomainError("log_gamma_ratio: numerator argument at a pole");
      }
      return 0.0;
    }
    return std::exp(scalar::lgamma(ev[0]) - scalar::lgamma(ev[1]));
  });
}

Matrix beta_matrix(const Matrix& s, const Matrix& v) {
  const JointEigensystem js = joint_pair(s, v, "beta_matrix");
  if (!is_positive_stable(s) || !is_positive_stable(v)) {
    throw DomainError("beta_matrix: arguments must be positive stable");
  }
  return apply_joint_function(js, [](std::span<const Complex> ev) {
    return std::exp(scalar::lgamma(ev[1]) + scalar::lgamma(ev[0]) -
                    scalar::lgamma(ev[0] + ev[1]));
  });
}

Matrix weight_integral(const Matrix& s, const Matrix& v, int max_degree) {
  require_square(s, "weight_integral");
  require_square(v, "weight_integral");
  require_commuting(s, v, "weight_integral");
  for (Complex w : spectrum(v)) {
    if (!(w.real() > -1.0)) {
      throw DomainError("weight_integral: V needs Re(w) > -1");
    }
  }
  const double bound = 2.0 * max_degree + 1.0;
  for (Complex x : spectrum(s)) {
    if (!(x.real() > bound)) {
      throw DomainError("weight_integral: S needs Re(s) > " +
                        std::to_string(bound));
    }
  }
  const Matrix id = identity(s.rows());
  return beta_matrix(s - id, v + id);
}

Matrix hypergeometric_pfq(std::span<const Matrix> numerators,
                          std::span<const Matrix> denominators, Complex z,
                          const PfqOptions& opts) {
  Index p = 0;
  std::vector<Matrix> all;
  for (const auto* group : {&numerators, &denominators}) {
    for (const Matrix& m : *group) {
      require_square(m, "hypergeometric_pfq");
      if (p == 0) p = m.rows();
      if (m.rows() != p) throw ShapeError("hypergeometric_pfq: size mismatch");
      all.push_back(m);
    }
  }
  if (p == 0) throw ShapeError("hypergeometric_pfq: no parameters");
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      require_commuting(all[a], all[b], "hypergeometric_pfq");
    }
  }

  std::optional<int> stop;
  for (const Matrix& m : numerators) {
    if (auto n = terminating_order(m)) stop = stop ? std::min(*stop, *n) : *n;
  }
  if (!stop && !(std::abs(z) < 1.0)) {
    throw DivergenceError("hypergeometric_pfq: non-terminating series needs |z| < 1");
  }

  const Matrix id = identity(p);
  Matrix term = id;
  Matrix sum = id;
  const int limit = stop ? std::min(*stop, opts.max_terms) : opts.max_terms;
  for (int j = 0; j < limit; ++j) {
    const double shift = static_cast<double>(j);
    for (auto it = numerators.rbegin(); it != numerators.rend(); ++it) {
      term = (*it + shift * id) * term;
    }
    for (const Matrix& d : denominators) {
      term = solve(d + shift * id, term);
    }
    term *= z / static_cast<double>(j + 1);
    sum += term;
    if (!stop && term.norm() <= opts.tol * std::max(1.0, sum.norm())) {
      return sum;
    }
  }
  if (!stop || *stop > opts.max_terms) {
    throw DivergenceError("hypergeometric_pfq: no convergence within " +
                          std::to_string(opts.max_terms) + " terms");
  }
  return sum;
}

std::vector<Matrix> delta_params(int k, const Matrix& y) {
  require_square(y, "delta_params");
  if (k < 1) throw DomainError("delta_params: k must be positive");
  std::vector<Matrix> out;
  out.reserve(k);
  const Matrix id = identity(y.rows());
  for (int i = 0; i < k; ++i) {
    out.push_back((y + static_cast<double>(i) * id) / static_cast<double>(k));
  }
  return out;
}

}  // namespace biortho
