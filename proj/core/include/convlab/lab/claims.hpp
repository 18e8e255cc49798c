#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convlab/convergence.hpp"
#include "convlab/lab/document.hpp"

namespace convlab::lab {

/// universal: every instance must satisfy the predicate.
/// existence: one instance exhibiting the property is enough.
/// search: a displayed statement probed for counterexamples, never asserted.
enum class ClaimKind { universal, existence, search };
enum class ClaimStatus { verified, refuted, search_exhausted, skipped_degenerate };

const char* to_string(ClaimKind k);
const char* to_string(ClaimStatus s);

/// One case a claim predicate is evaluated on. Sets and families live on
/// the carrier of the first space (or the first map's domain).
struct Instance {
  std::string tag;
  std::vector<std::int64_t> params;
  std::vector<Convergence> spaces;
  std::vector<AtomMap> maps;
  std::vector<Subset> sets;
  std::vector<std::vector<Subset>> families;

  const Carrier& set_carrier() const;
};

Json serialize_instance(const Instance& in);
Instance parse_instance(const Json& doc);

enum class Outcome { holds, fails, degenerate };

struct Check {
  Outcome outcome;
  std::string note;
};

/// Indexable instance stream; at(i) must be pure.
struct Generated {
  std::size_t count = 0;
  std::function<Instance(std::size_t)> at;
  std::vector<std::size_t> sizes;
  std::string mode;  // "exhaustive", "sampled" or "exhaustive+sampled"
  bool seeded = false;
};

struct ClaimContext {
  Bounds bounds;
  /// Upper carrier size for generation; each claim has its own default.
  std::optional<std::size_t> size;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t workers = 1;
};

struct Claim {
  std::string id;
  std::string statement;
  ClaimKind kind;
  bool must_hold;
  std::function<Generated(const ClaimContext&)> generate;
  std::function<Check(const Instance&, const Bounds&)> check;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::universal;
  bool must_hold = false;
  ClaimStatus status = ClaimStatus::verified;
  std::vector<std::size_t> sizes;
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::size_t instances = 0;
  std::size_t holding = 0;
  std::size_t failing = 0;
  std::size_t degenerate = 0;
  /// Failing instances for universal and search claims, the exhibiting
  /// instance for existence claims. At most three, in stream order.
  std::vector<Json> witnesses;
  /// Distinct check notes with their multiplicity, sorted.
  std::vector<std::pair<std::string, std::size_t>> notes;

  bool blocks_suite() const { return must_hold && status == ClaimStatus::refuted; }
  Json to_json() const;
};

const std::vector<Claim>& registry();
/// Throws InputError for unknown ids.
const Claim& find_claim(const std::string& id);

ClaimReport run_claim(const Claim& claim, const ClaimContext& ctx);
/// Re-evaluates a serialized witness.
Check replay(const Claim& claim, const Json& instance, const Bounds& bounds = {});

/// CONVLAB_WORKERS, else the available hardware parallelism.
std::size_t default_workers();

}  // namespace convlab::lab
