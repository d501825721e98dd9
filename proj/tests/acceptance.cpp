// Acceptance checks: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance 4 7        selected criteria
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "biortho/cli.hpp"
#include "biortho/identities.hpp"
#include "biortho/io.hpp"
#include "biortho/special.hpp"
#include "biortho/verify.hpp"

using namespace biortho;

namespace {

struct Entry {
  std::string path;
  ParamSet params;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Entry> load_corpus() {
  std::vector<Entry> out;
  for (const auto& f : cli::fixture_files()) out.push_back({f, io::load_params(f)});
  return out;
}

const std::vector<Entry>& corpus() {
  static const std::vector<Entry> c = load_corpus();
  return c;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::vector<VerificationReport> suite(const ParamSet& p, std::set<IdentityId> ids) {
  SuiteConfig config;
  config.identities = std::move(ids);
  return run_suite(p, config);
}

struct Tally {
  int total = 0;
  int failed = 0;
  double worst_ratio = 0.0;  // residual / tolerance
  std::string first_failure;

  void add(const VerificationReport& r, const std::string& where) {
    ++total;
    worst_ratio = std::max(worst_ratio, std::isfinite(r.residual) ? r.residual / r.tolerance : INFINITY);
    if (!r.passed) {
      if (failed == 0) {
        first_failure = fmt("%s %s [%s] residual %.3g > %.3g", where.c_str(),
                            std::string(to_string(r.identity_id)).c_str(), r.notes.c_str(), r.residual, r.tolerance);
      }
      ++failed;
    }
  }
  std::string summary() const {
    std::string s = fmt("%d checks, %d failed, worst residual/tolerance %.3g", total, failed, worst_ratio);
    if (failed) s += "; first failure: " + first_failure;
    return s;
  }
};

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double off = 0.0, diag = 0.0;
  Tally t;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::biorth})) {
      t.add(r, e.path);
      if (r.notes.find("off-diagonal") != std::string::npos) {
        off = std::max(off, r.residual);
      } else {
        diag = std::max(diag, r.residual);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = secs < 30.0;
  return {t.failed == 0 && t.total == 25 * static_cast<int>(corpus().size()) && fast,
          fmt("worst off-diagonal %.3g (tol 1e-8), worst diagonal %.3g (tol 1e-7), %zu parameter sets, %.2f s "
              "(limit 30 s); ",
              off, diag, corpus().size(), secs) +
              t.summary()};
}

Outcome criterion2() {
  Tally t;
  int fomp = 0, norms = 0;
  for (auto [h, c] : {std::pair{15.3, 0.35}, std::pair{14.1, -0.55}, std::pair{17.75, 2.2}}) {
    for (const auto& r : scalar_reduction_suite(h, c, 6)) {
      const bool is_fomp = r.notes.rfind("foMp", 0) == 0;
      const bool is_norm = r.notes.rfind("closed norm", 0) == 0;
      if (!is_fomp && !is_norm) continue;
      fomp += is_fomp;
      norms += is_norm;
      t.add(r, fmt("h=%g c=%g", h, c));
    }
  }
  int matrix_norms = 0;
  for (const auto& e : corpus()) {
    if (e.params.upsilon() != 1) continue;
    for (const auto& r : suite(e.params, {IdentityId::upsilon_one})) {
      if (r.notes.find("norm") == std::string::npos || r.notes.find("quadrature") != std::string::npos) continue;
      ++matrix_norms;
      t.add(r, e.path);
    }
  }
  return {t.failed == 0 && fomp == 21 && matrix_norms > 0,
          fmt("%d coefficient comparisons (n <= 6, tol 1e-10), %d scalar and %d corpus norm comparisons (tol 1e-9); ",
              fomp, norms, matrix_norms) +
              t.summary()};
}

Outcome criterion3() {
  Tally ode, fd;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::ode})) ode.add(r, e.path);
  }
  for (auto [h, c] : {std::pair{11.4, 0.35}, std::pair{15.3, -0.55}}) {
    for (const auto& r : scalar_reduction_suite(h, c, 4)) {
      if (r.notes.rfind("scalar ODE", 0) == 0) fd.add(r, fmt("h=%g c=%g", h, c));
    }
  }
  return {ode.failed == 0 && fd.failed == 0 && ode.total > 0 && fd.total > 0,
          "coefficient space (tol 1e-10): " + ode.summary() + "; finite differences (tol 1e-7): " + fd.summary()};
}

Outcome criterion4() {
  std::map<IdentityId, Tally> by;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::rec1, IdentityId::rec2, IdentityId::rec3, IdentityId::rec4})) {
      by[r.identity_id].add(r, e.path);
    }
  }
  bool ok = true;
  std::string detail;
  for (auto& [id, t] : by) {
    ok = ok && t.failed == 0;
    detail += fmt("%s: %d/%d pass (worst %.3g x tol); ", std::string(to_string(id)).c_str(), t.total - t.failed,
                  t.total, t.worst_ratio);
  }
  detail += "rec4 " + by[IdentityId::rec4].summary();
  return {ok, detail};
}

Outcome criterion5() {
  Tally zero, nonzero;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::moment_first, IdentityId::moment_second})) {
      (r.notes.find("; zero branch") != std::string::npos ? zero : nonzero).add(r, e.path);
    }
  }
  return {zero.failed == 0 && nonzero.failed == 0 && nonzero.total == 10 * static_cast<int>(corpus().size()),
          "zero branches (|moment| <= 1e-8 x integrand mass): " + zero.summary() +
              "; i = n branches (|moment| >= 1e3 x quadrature error): " + nonzero.summary()};
}

Outcome criterion6() {
  Tally t;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::finite_difference})) t.add(r, e.path);
  }
  return {t.failed == 0 && t.total == 25 * static_cast<int>(corpus().size()), "grid j, s <= 4 (tol 1e-9): " + t.summary()};
}

Outcome criterion7() {
  Tally g2;
  int g1_recorded = 0, g1_pass = 0, oracle = 0;
  double oracle_worst = 0.0;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::genfunc1, IdentityId::genfunc2})) {
      if (r.identity_id == IdentityId::genfunc2) {
        g2.add(r, e.path);
        continue;
      }
      if (std::isfinite(r.residual) && r.notes.find("stated form") != std::string::npos) ++g1_recorded;
      g1_pass += r.passed;
      const auto pos = r.notes.find("oracle residual ");
      if (pos != std::string::npos) {
        ++oracle;
        oracle_worst = std::max(oracle_worst, std::atof(r.notes.c_str() + pos + 16));
      }
    }
  }
  const int n = static_cast<int>(corpus().size());
  const bool ok = g2.failed == 0 && g2.total == n && g1_recorded == n && oracle > 0;
  return {ok, "genfunc2 order 5 within allowance: " + g2.summary() +
                  fmt("; genfunc1 recorded for %d/%d sets, within allowance for %d, upsilon=1 oracle compared on %d "
                      "sets (worst %.3g)",
                      g1_recorded, n, g1_pass, oracle, oracle_worst)};
}

Outcome criterion8() {
  Tally t;
  for (const auto& e : corpus()) {
    for (const auto& r : suite(e.params, {IdentityId::jacobi})) t.add(r, e.path);
  }
  return {t.failed == 0 && t.total == 5 * static_cast<int>(corpus().size()),
          "round trip and route agreement at 10 points, n <= 4 (tol 1e-9): " + t.summary()};
}

Outcome criterion9() {
  int tested = 0, held_i = 0, held_ii = 0, adjusted_ok = 0, adjusted = 0;
  bool stated = true;
  for (const auto& e : corpus()) {
    if (e.params.upsilon() > 2) continue;
    for (const auto& r : suite(e.params, {IdentityId::integral_rep})) {
      stated = stated && r.notes.find("reading") != std::string::npos &&
               r.notes.find("holds") != std::string::npos;
      if (r.notes.find("reading (i) ") != std::string::npos) {
        ++tested;
        held_i += r.passed;
      } else if (r.notes.find("reading (ii)") != std::string::npos) {
        ++tested;
        held_ii += r.passed;
      } else {
        ++adjusted;
        adjusted_ok += r.passed;
      }
    }
  }
  const std::string verdict = held_i + held_ii == 0 ? "neither stated reading satisfies the identity"
                                                    : "a stated reading satisfies the identity";
  return {stated && tested == 8 * 6,
          fmt("%d coefficient-space tests over upsilon in {1,2}, n <= 3: reading (i) held %d, reading (ii) held %d; "
              "%s; adjusted form held %d/%d",
              tested, held_i, held_ii, verdict.c_str(), adjusted_ok, adjusted)};
}

Outcome criterion10() {
  double worst_poch = 0.0, worst_beta = 0.0, worst_weight = 0.0;
  const QuadRule rule = QuadRule::gauss_legendre(200);
  for (const auto& e : corpus()) {
    const Matrix id = identity(e.params.dim());
    const Matrix& h = e.params.h();
    const Matrix& c = e.params.c();
    for (const Matrix& s : {Matrix(c + id), Matrix(h), Matrix(c + 0.5 * h)}) {
      for (int k = 0; k <= 6; ++k) {
        const Matrix p = pochhammer(s, k);
        const Matrix g = gamma_matrix(s + static_cast<double>(k) * id) * gamma_matrix_inv(s);
        worst_poch = std::max(worst_poch, (p - g).norm() / p.norm());
      }
    }
    // B(S, V) = int u^{S-I} (1+u)^{-(S+V)} du, i.e. the weight with C = S - I, H = V + I.
    for (auto [s, v] : {std::pair{Matrix(c + id), Matrix(h - id)}, std::pair{Matrix(c + id), Matrix(c + id)},
                        std::pair{Matrix(0.5 * h), Matrix(c + 2.0 * id)}}) {
      const ParamSet w = ParamSet::relaxed(v + id, s - id, 1);
      const MatrixPoly one[] = {MatrixPoly::constant(id)};
      const Matrix q = integrate_weighted(w, one, rule).value;
      const Matrix b = beta_matrix(s, v);
      worst_beta = std::max(worst_beta, (q - b).norm() / b.norm());
    }
    for (const auto& r : suite(e.params, {IdentityId::weight_integral})) worst_weight = std::max(worst_weight, r.residual);
  }
  const double tol = 1e-8;
  return {worst_poch <= tol && worst_beta <= tol && worst_weight <= tol,
          fmt("Pochhammer vs Gamma ratio %.3g, Beta closed form vs quadrature %.3g, weight integral vs quadrature "
              "%.3g (tol 1e-8)",
              worst_poch, worst_beta, worst_weight)};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"biorthogonality reproduction", criterion1},
      {"upsilon = 1 collapse", criterion2},
      {"matrix differential equation", criterion3},
      {"recurrences rec1-rec4", criterion4},
      {"moment orthogonality", criterion5},
      {"finite-difference identity", criterion6},
      {"generating functions", criterion7},
      {"Jacobi round trip", criterion8},
      {"integral representation", criterion9},
      {"special-function substrate", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) selected.push_back(i);
  }
  int failures = 0;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    const auto& [name, fn] = criteria()[k - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", k, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
