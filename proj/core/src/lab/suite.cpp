#include "convlab/lab/suite.hpp"

#include <algorithm>
#include <sstream>

namespace convlab::lab {

namespace {

constexpr const char* kFaultClaim = "fault-declared-classes";

}  // namespace

bool SuiteReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimReport& c) { return c.blocks_suite(); });
}

Json SuiteReport::to_json() const {
  Json doc;
  doc["suite"] = name;
  doc["seed"] = seed;
  Json cs = Json::array();
  std::size_t verified = 0, refuted = 0, exhausted = 0, skipped = 0;
  for (const auto& c : claims) {
    cs.push_back(c.to_json());
    switch (c.status) {
      case ClaimStatus::verified: ++verified; break;
      case ClaimStatus::refuted: ++refuted; break;
      case ClaimStatus::search_exhausted: ++exhausted; break;
      case ClaimStatus::skipped_degenerate: ++skipped; break;
    }
  }
  doc["claims"] = std::move(cs);
  Json summary;
  summary["verified"] = verified;
  summary["refuted"] = refuted;
  summary["search_exhausted"] = exhausted;
  summary["skipped_degenerate"] = skipped;
  doc["summary"] = std::move(summary);
  doc["passed"] = passed();
  return doc;
}

std::string claim_text(const ClaimReport& r) {
  std::ostringstream out;
  out << r.id << ": " << to_string(r.status) << (r.must_hold ? "" : " (not asserted)") << "\n";
  out << "  " << r.statement << "\n";
  out << "  scope: sizes";
  for (auto n : r.sizes) out << ' ' << n;
  out << ", " << r.mode;
  if (r.seed) out << ", seed " << *r.seed;
  out << ", " << r.instances << " instances\n";
  out << "  holding " << r.holding << ", failing " << r.failing << ", degenerate " << r.degenerate << "\n";
  for (const auto& [note, n] : r.notes) out << "  note: " << note << " (" << n << ")\n";
  for (const auto& w : r.witnesses) out << "  witness: " << w.dump() << "\n";
  return out.str();
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << name << " (seed " << seed << ")\n";
  for (const auto& c : claims) out << claim_text(c);
  out << (passed() ? "PASSED" : "FAILED") << "\n";
  return out.str();
}

std::vector<std::string> suite_names() { return {"paper-core", "fault-injection"}; }

std::vector<std::string> suite_claims(const std::string& name) {
  std::vector<std::string> ids;
  if (name == "paper-core") {
    for (const auto& c : registry()) {
      if (c.id != kFaultClaim) ids.push_back(c.id);
    }
  } else if (name == "fault-injection") {
    ids.push_back(kFaultClaim);
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  return ids;
}

SuiteReport run_suite(const std::string& name, const ClaimContext& ctx) {
  SuiteReport r;
  r.name = name;
  r.seed = ctx.seed;
  for (const auto& id : suite_claims(name)) r.claims.push_back(run_claim(find_claim(id), ctx));
  return r;
}

}  // namespace convlab::lab
