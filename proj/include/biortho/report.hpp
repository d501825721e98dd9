#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace biortho {

enum class IdentityId {
  weight_integral,
  biorth,
  moment_first,
  moment_second,
  hypergeometric,
  ode,
  rec1,
  rec2,
  rec3,
  rec4,
  genfunc1,
  genfunc2,
  integral_rep,
  finite_difference,
  jacobi,
  upsilon_one,
};

std::string_view to_string(IdentityId id);
/// Throws std::invalid_argument for unknown names.
IdentityId identity_from_string(std::string_view name);
std::vector<IdentityId> all_identities();

struct VerificationReport {
  IdentityId identity_id = IdentityId::biorth;
  std::string params_digest;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;

  static VerificationReport make(IdentityId id, std::string digest,
                                 double residual, double tolerance,
                                 std::string notes);
};

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace biortho
