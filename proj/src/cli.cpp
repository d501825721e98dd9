#include "biortho/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "biortho/errors.hpp"
#include "biortho/family.hpp"
#include "biortho/io.hpp"
#include "biortho/verify.hpp"

#ifndef BIORTHO_FIXTURES_DIR
#define BIORTHO_FIXTURES_DIR "fixtures"
#endif

namespace biortho::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string params;
  std::string fixtures;
  std::string family = "first";
  int n = 0;
  std::vector<double> points;
  std::optional<double> tol;
  int quad_points = 200;
  std::optional<int> max_n;
  std::string identities;
  std::string format = "json";
};

void error_json(std::ostream& err, const std::string& condition, const std::string& message) {
  ordered_json j;
  j["error"] = message;
  j["condition"] = condition;
  err << j.dump() << "\n";
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BIORTHO_M_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

MatrixPoly family_poly(const ParamSet& params, const std::string& family, int n) {
  params.require_degree(n);
  return family == "first" ? m_first(params, n) : m_second(params, n);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const ParamSet params = io::load_params(o.params);
  const MatrixPoly poly = family_poly(params, o.family, o.n);
  ordered_json values = ordered_json::array();
  for (double u : o.points) {
    ordered_json entry;
    entry["u"] = u;
    entry["value"] = io::matrix_to_json(poly(u));
    values.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["family"] = o.family;
  doc["n"] = o.n;
  doc["params_digest"] = params.digest();
  doc["values"] = std::move(values);
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const ParamSet params = io::load_params(o.params);
  const MatrixPoly poly = family_poly(params, o.family, o.n);
  ordered_json doc;
  doc["family"] = o.family;
  doc["n"] = o.n;
  doc["params_digest"] = params.digest();
  const nlohmann::json body = io::poly_to_json(poly);
  doc["p"] = body["p"];
  doc["degree"] = body["degree"];
  doc["coefficients"] = body["coefficients"];
  out << doc.dump(2) << "\n";
  return kOk;
}

std::set<IdentityId> parse_identities(const std::string& list) {
  std::set<IdentityId> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ids.insert(identity_from_string(item));
  }
  return ids;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig config;
  config.tol = o.tol;
  config.quad_points = o.quad_points;
  config.max_n = o.max_n;
  config.threads = thread_cap();
  try {
    config.identities = parse_identities(o.identities);
  } catch (const std::invalid_argument& e) {
    error_json(err, "identities", e.what());
    return kValidation;
  }
  std::vector<std::string> files;
  if (!o.params.empty()) {
    files.push_back(o.params);
  } else {
    files = fixture_files(o.fixtures);
    if (files.empty()) {
      error_json(err, "fixtures", "no parameter files found");
      return kValidation;
    }
  }
  // Parse everything first so a bad file fails before any work is done.
  std::vector<ParamSet> sets;
  for (const auto& f : files) sets.push_back(io::load_params(f));
  if (config.max_n) {
    for (const auto& s : sets) {
      if (*config.max_n < 0 || *config.max_n > s.max_degree()) {
        throw ValidationError("max_degree", "--max-n " + std::to_string(*config.max_n) +
                                                " outside [0, max_degree = " +
                                                std::to_string(s.max_degree()) + "]");
      }
    }
  }
  std::vector<VerificationReport> all;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto reports = run_suite(sets[i], config);
    const auto bad = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
    failed += bad;
    err << files[i] << ": " << reports.size() - bad << " passed, " << bad << " failed\n";
    all.insert(all.end(), reports.begin(), reports.end());
  }
  out << (o.format == "csv" ? reports_to_csv(all) : reports_to_json(all) + "\n");
  err << "total: " << all.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  const ParamSet params = io::load_params(o.params);
  const int max_n = o.max_n.value_or(params.max_degree());
  if (max_n < 0 || max_n > params.max_degree()) {
    throw ValidationError("max_degree", "--max-n outside [0, max_degree]");
  }
  const QuadRule rule = QuadRule::gauss_legendre(o.quad_points);
  std::vector<Matrix> closed;
  for (int n = 0; n <= max_n; ++n) closed.push_back(biorth_closed(params, n));
  out << "n,s,numeric_norm,closed_norm,relative_residual\n";
  char buf[160];
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= max_n; ++s) {
      const Matrix lambda = biorth_numeric(params, n, s, rule).value;
      const Matrix& scale = closed[std::max(n, s)];
      const double closed_norm = n == s ? scale.norm() : 0.0;
      const double residual = n == s ? (lambda - scale).norm() / scale.norm() : lambda.norm() / scale.norm();
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", n, s, lambda.norm(), closed_norm, residual);
      out << buf;
    }
  }
  return kOk;
}

}  // namespace

std::vector<std::string> fixture_files(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root = dir.empty() ? fs::path(BIORTHO_FIXTURES_DIR) : fs::path(dir);
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite biorthogonal M matrix polynomials", "biortho-m"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--params", o.params, "parameter JSON file")->required();
    sub->add_option("--family", o.family, "first or second")->check(CLI::IsMember({"first", "second"}));
    sub->add_option("-n,--degree", o.n, "polynomial index")->required();
  };
  CLI::App* eval = app.add_subcommand("eval", "evaluate M_n at points");
  add_family(eval);
  eval->add_option("--points", o.points, "evaluation points")->delimiter(',')->required();
  CLI::App* coeffs = app.add_subcommand("coeffs", "dump monomial coefficients");
  add_family(coeffs);

  CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--params", o.params, "parameter JSON file; all fixtures when omitted");
  verify->add_option("--fixtures", o.fixtures, "fixture directory");
  verify->add_option("--tol", o.tol, "override every tolerance");
  verify->add_option("--quad-points", o.quad_points)->check(CLI::PositiveNumber);
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--identities", o.identities, "comma separated identity ids");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* table = app.add_subcommand("table", "biorthogonality grid as CSV");
  table->add_option("--params", o.params, "parameter JSON file")->required();
  table->add_option("--max-n", o.max_n);
  table->add_option("--quad-points", o.quad_points)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"biortho-m"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return kValidation;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_table(o, out);
  } catch (const ValidationError& e) {
    error_json(err, e.condition(), e.what());
    return kValidation;
  } catch (const DomainError& e) {
    error_json(err, "domain", e.what());
    return kValidation;
  } catch (const ShapeError& e) {
    error_json(err, "dimension", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    error_json(err, "numerical", e.what());
    return kNumerical;
  }
}

}  // namespace biortho::cli
