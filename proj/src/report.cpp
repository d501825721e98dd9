#include "biortho/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace biortho {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 16> kNames{{
    {IdentityId::weight_integral, "weight_integral"},
    {IdentityId::biorth, "biorth"},
    {IdentityId::moment_first, "moment_first"},
    {IdentityId::moment_second, "moment_second"},
    {IdentityId::hypergeometric, "hypergeometric"},
    {IdentityId::ode, "ode"},
    {IdentityId::rec1, "rec1"},
    {IdentityId::rec2, "rec2"},
    {IdentityId::rec3, "rec3"},
    {IdentityId::rec4, "rec4"},
    {IdentityId::genfunc1, "genfunc1"},
    {IdentityId::genfunc2, "genfunc2"},
    {IdentityId::integral_rep, "integral_rep"},
    {IdentityId::finite_difference, "finite_difference"},
    {IdentityId::jacobi, "jacobi"},
    {IdentityId::upsilon_one, "upsilon_one"},
}};

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

IdentityId identity_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown identity: " + std::string(name));
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

VerificationReport VerificationReport::make(IdentityId id, std::string digest,
                                            double residual, double tolerance,
                                            std::string notes) {
  VerificationReport r;
  r.identity_id = id;
  r.params_digest = std::move(digest);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.notes = std::move(notes);
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity_id"] = std::string(to_string(r.identity_id));
    j["params_digest"] = r.params_digest;
    // JSON has no infinity; failures from exceptions serialize as null.
    if (std::isfinite(r.residual)) {
      j["residual"] = r.residual;
    } else {
      j["residual"] = nullptr;
    }
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "identity_id,params_digest,residual,tolerance,passed,notes\n";
  for (const auto& r : reports) {
    out += std::string(to_string(r.identity_id)) + "," + r.params_digest + "," +
           format_double(r.residual) + "," + format_double(r.tolerance) + "," +
           (r.passed ? "true" : "false") + "," + csv_quote(r.notes) + "\n";
  }
  return out;
}

}  // namespace biortho
