#include <gtest/gtest.h>

#include <set>

#include "convlab/fixtures.hpp"
#include "convlab/lab/claims.hpp"
#include "convlab/lab/document.hpp"
#include "convlab/lab/enumerate.hpp"
#include "convlab/lab/suite.hpp"
#include "support.hpp"

using namespace convlab;
using namespace convlab::lab;

namespace {

const char* kSier = R"({
  "carrier": ["0", "1"],
  "completion": "strict",
  "limits": [
    {"kernel": ["0"], "limits": ["0"]},
    {"kernel": ["1"], "limits": ["0", "1"]},
    {"kernel": ["0", "1"], "limits": ["0"]}
  ]
})";

ClaimReport run(const std::string& id, std::optional<std::size_t> size = std::nullopt, std::size_t workers = 1,
                std::size_t samples = 10000) {
  ClaimContext ctx;
  ctx.size = size;
  ctx.workers = workers;
  ctx.samples = samples;
  return run_claim(find_claim(id), ctx);
}

}  // namespace

TEST(Document, StrictRoundTripIsByteIdentical) {
  const auto sier = parse_space_text(kSier);
  EXPECT_EQ(sier, fixtures::sierpinski());
  const std::string once = dump(serialize_space(sier));
  const std::string twice = dump(serialize_space(parse_space_text(once)));
  EXPECT_EQ(once, twice);
  for (const auto& f : fixtures::all()) {
    const std::string text = dump(serialize_space(f.space));
    EXPECT_EQ(parse_space_text(text), f.space);
    EXPECT_EQ(dump(serialize_space(parse_space_text(text))), text);
  }
}

TEST(Document, IsotoneCompletion) {
  const auto xi = parse_space_text(R"({"carrier": ["a", "b"], "completion": "isotone",
    "limits": [{"kernel": ["b"], "limits": ["a", "b"]}]})");
  const auto& c = xi.carrier();
  EXPECT_EQ(xi.lim(c.subset({"a"})), c.subset({"a"}));
  EXPECT_EQ(xi.lim(c.subset({"b"})), c.subset({"a", "b"}));
  EXPECT_TRUE(xi.lim(c.full()).empty());
  // Limits of larger kernels propagate down.
  const auto up = parse_space_text(R"({"carrier": ["a", "b"], "completion": "isotone",
    "limits": [{"kernel": ["a", "b"], "limits": ["a"]}]})");
  EXPECT_EQ(up.lim(c.subset({"b"})), c.subset({"a", "b"}));
}

TEST(Document, Errors) {
  EXPECT_THROW(parse_space_text(R"({"carrier": ["a", "b"], "completion": "isotone",
    "limits": [{"kernel": ["d"], "limits": ["a"]}]})"), InputError);
  EXPECT_THROW(parse_space_text(R"({"carrier": ["a", "b"], "completion": "isotone",
    "limits": [{"kernel": ["a"], "limits": ["a"]}, {"kernel": ["a"], "limits": ["a"]}]})"), InputError);
  EXPECT_THROW(parse_space_text(R"({"carrier": ["a", "b"], "completion": "isotone",
    "limits": [{"kernel": [], "limits": ["a"]}]})"), InputError);
  EXPECT_THROW(parse_space_text("{not json"), InputError);
  EXPECT_THROW(parse_space_text(R"({"carrier": ["a", "b"], "completion": "strict",
    "limits": [{"kernel": ["a"], "limits": ["a"]}]})"), InputError);
  try {
    parse_space_text(R"({"carrier": ["a", "b"], "completion": "strict", "limits": [
      {"kernel": ["a"], "limits": ["b"]}, {"kernel": ["b"], "limits": ["b"]}, {"kernel": ["a", "b"], "limits": []}]})");
    FAIL() << "point axiom violation accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("point"), std::string::npos) << e.what();
  }
  Bounds b;
  b.max_carrier = 2;
  EXPECT_THROW(parse_space(serialize_space(fixtures::np3()), b), BoundExceeded);
}

TEST(Document, MapsAndInstancesRoundTrip) {
  const auto q = fixtures::quotient_not_hereditarily_quotient();
  const auto doc = serialize_map(q);
  const auto back = parse_map_text(dump(doc));
  EXPECT_EQ(back.domain(), q.domain());
  EXPECT_EQ(back.codomain(), q.codomain());
  EXPECT_EQ(back.map(), q.map());
  EXPECT_EQ(dump(serialize_map(back)), dump(doc));
  Json partial = doc;
  partial["assignment"].erase("d");
  EXPECT_THROW(parse_map(partial), InputError);

  Instance in;
  in.tag = "map";
  in.params = {3, -1};
  in.spaces = {q.domain(), q.codomain()};
  in.maps = {q.map()};
  in.sets = {Subset(0b0101)};
  in.families = {{Subset(0b1), Subset(0b11)}};
  const auto j = serialize_instance(in);
  EXPECT_EQ(dump(serialize_instance(parse_instance(j))), dump(j));
}

TEST(Enumerate, CountsMatchOracles) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto tables = oracle::all_convergence_tables(n);
    std::set<oracle::Table> expect(tables.begin(), tables.end());
    std::set<oracle::Table> got;
    for (const auto& xi : enumerate(n, SpaceClass::convergence)) got.insert(oracle::raw(xi));
    EXPECT_EQ(got, expect);
    EXPECT_EQ(count(n, SpaceClass::convergence), tables.size());
    std::size_t pre = 0;
    for (const auto& t : tables) pre += oracle::is_pretopology_table(n, t);
    EXPECT_EQ(count(n, SpaceClass::pretopology), pre);
  }
  EXPECT_EQ(count(2, SpaceClass::convergence), 9u);
  EXPECT_EQ(count(2, SpaceClass::topology), 4u);
  EXPECT_EQ(count(2, SpaceClass::pretopology), 4u);
  EXPECT_EQ(count(3, SpaceClass::pretopology), 64u);
  EXPECT_EQ(count(4, SpaceClass::pretopology), 4096u);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<oracle::Table> expect;
    for (const auto& closed : oracle::topologies_as_closed_sets(n)) {
      expect.insert(oracle::topology_table(n, oracle::complements(closed, n)));
    }
    std::set<oracle::Table> got;
    for (const auto& xi : enumerate(n, SpaceClass::topology)) got.insert(oracle::raw(xi));
    EXPECT_EQ(got, expect) << n;
  }
}

TEST(Enumerate, CanonicalOrderAndBounds) {
  const auto a = enumerate(2, SpaceClass::convergence);
  const auto b = enumerate(2, SpaceClass::convergence);
  EXPECT_EQ(a, b);
  // The first space is the discrete one: each atom converges only from its singleton.
  EXPECT_EQ(a.front(), Convergence::discrete(Carrier::lettered(2)));
  EXPECT_EQ(a.back(), Convergence::chaotic(Carrier::lettered(2)));
  EXPECT_THROW(enumerate(4, SpaceClass::convergence), BoundExceeded);
  EXPECT_THROW(enumerate(5, SpaceClass::topology), BoundExceeded);
  EXPECT_THROW(enumerate(0, SpaceClass::topology), InputError);
  EXPECT_FALSE(space_class_from_string("uniformity").has_value());
}

TEST(Claims, SearchExamples) {
  const auto s = run("S-product-commutation", 2);
  EXPECT_EQ(s.status, ClaimStatus::verified);
  EXPECT_EQ(s.instances, 81u);
  EXPECT_EQ(s.mode, "exhaustive");
  const auto t = run("T-product-commutation", 2);
  EXPECT_EQ(t.status, ClaimStatus::search_exhausted);
  EXPECT_FALSE(t.blocks_suite());
  const auto q = run("quotient-not-hereditarily-quotient", 3);
  EXPECT_EQ(q.status, ClaimStatus::verified);
  ASSERT_EQ(q.witnesses.size(), 1u);
  const auto w = replay(find_claim(q.id), q.witnesses.front());
  EXPECT_EQ(w.outcome, Outcome::holds);
  const auto h = run("hereditarily-quotient-not-almost-open", 2);
  EXPECT_EQ(h.status, ClaimStatus::verified);
  EXPECT_THROW(find_claim("no-such-claim"), InputError);
}

TEST(Claims, SearchWitnessesReplay) {
  const auto r = run("T-initial-commutation", 3, 1, 2000);
  ASSERT_EQ(r.status, ClaimStatus::search_exhausted);
  ASSERT_GT(r.failing, 0u);
  for (const auto& w : r.witnesses) EXPECT_EQ(replay(find_claim(r.id), w).outcome, Outcome::fails);
}

TEST(Claims, ReportsIndependentOfWorkerCount) {
  for (const char* id : {"S-product-commutation", "AH-initial-commutation", "T-initial-commutation",
                         "literal-quotient-display", "quotient-not-hereditarily-quotient"}) {
    const auto one = dump(run(id, std::nullopt, 1, 3000).to_json());
    const auto many = dump(run(id, std::nullopt, 5, 3000).to_json());
    EXPECT_EQ(one, many) << id;
  }
}

TEST(Claims, ReportKeyOrder) {
  const auto j = run("hyperspace-count").to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "statement", "kind", "must_hold", "status", "scope", "tally",
                                            "witnesses", "notes"}));
  EXPECT_EQ(j["status"], "verified");
}

TEST(Suite, FaultInjectionExitsNonzeroWithReplayableWitness) {
  ClaimContext ctx;
  const auto r = run_suite("fault-injection", ctx);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  ASSERT_EQ(r.claims.size(), 1u);
  const auto& c = r.claims.front();
  EXPECT_EQ(c.status, ClaimStatus::refuted);
  ASSERT_FALSE(c.witnesses.empty());
  EXPECT_EQ(replay(find_claim(c.id), c.witnesses.front()).outcome, Outcome::fails);
  EXPECT_EQ(dump(run_suite("fault-injection", ctx).to_json()), dump(r.to_json()));
}

TEST(Suite, NamesAndErrors) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"paper-core", "fault-injection"}));
  const auto ids = suite_claims("paper-core");
  EXPECT_EQ(std::count(ids.begin(), ids.end(), "fault-declared-classes"), 0);
  EXPECT_EQ(ids.size() + 1, registry().size());
  EXPECT_THROW(suite_claims("nope"), InputError);
}
