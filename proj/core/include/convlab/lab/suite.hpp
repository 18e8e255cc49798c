#pragma once

#include <string>
#include <vector>

#include "convlab/lab/claims.hpp"

namespace convlab::lab {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 1;
  std::vector<ClaimReport> claims;

  /// Nothing refuted among must-hold claims.
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  Json to_json() const;
  std::string to_text() const;
};

/// "paper-core": every registered claim except the fault fixture.
/// "fault-injection": the deliberately mis-declared fixture only.
std::vector<std::string> suite_names();
/// Claim ids of a suite, in run order. Throws InputError for unknown names.
std::vector<std::string> suite_claims(const std::string& name);
SuiteReport run_suite(const std::string& name, const ClaimContext& ctx);

std::string claim_text(const ClaimReport& r);

}  // namespace convlab::lab
