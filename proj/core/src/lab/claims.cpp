#include "convlab/lab/claims.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "convlab/compactness.hpp"
#include "convlab/duality.hpp"
#include "convlab/fixtures.hpp"
#include "convlab/lab/enumerate.hpp"
#include "convlab/maps.hpp"

namespace convlab::lab {

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::universal: return "universal";
    case ClaimKind::existence: return "existence";
    case ClaimKind::search: return "search";
  }
  return "unknown";
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::search_exhausted: return "search-exhausted";
    case ClaimStatus::skipped_degenerate: return "skipped-degenerate";
  }
  return "unknown";
}

const Carrier& Instance::set_carrier() const {
  if (!spaces.empty()) return spaces.front().carrier();
  if (!maps.empty()) return maps.front().domain();
  throw InputError("instance has no carrier for its sets");
}

Json serialize_instance(const Instance& in) {
  Json doc;
  doc["tag"] = in.tag;
  if (!in.params.empty()) doc["params"] = in.params;
  if (!in.spaces.empty()) {
    Json spaces = Json::array();
    for (const auto& s : in.spaces) spaces.push_back(serialize_space(s));
    doc["spaces"] = std::move(spaces);
  }
  if (!in.maps.empty()) {
    Json maps = Json::array();
    for (const auto& m : in.maps) maps.push_back(serialize_atom_map(m));
    doc["maps"] = std::move(maps);
  }
  if (!in.sets.empty()) {
    Json sets = Json::array();
    for (auto s : in.sets) sets.push_back(serialize_subset(in.set_carrier(), s));
    doc["sets"] = std::move(sets);
  }
  if (!in.families.empty()) {
    Json fams = Json::array();
    for (const auto& f : in.families) {
      Json members = Json::array();
      for (auto s : f) members.push_back(serialize_subset(in.set_carrier(), s));
      fams.push_back(std::move(members));
    }
    doc["families"] = std::move(fams);
  }
  return doc;
}

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  const Bounds wide{kMaxAtoms};
  Instance in;
  in.tag = doc.value("tag", std::string{});
  if (auto it = doc.find("params"); it != doc.end()) in.params = it->get<std::vector<std::int64_t>>();
  if (auto it = doc.find("spaces"); it != doc.end()) {
    for (const auto& s : *it) in.spaces.push_back(parse_space(s, wide));
  }
  if (auto it = doc.find("maps"); it != doc.end()) {
    for (const auto& m : *it) in.maps.push_back(parse_atom_map(m));
  }
  if (auto it = doc.find("sets"); it != doc.end()) {
    for (const auto& s : *it) in.sets.push_back(parse_subset(in.set_carrier(), s));
  }
  if (auto it = doc.find("families"); it != doc.end()) {
    for (const auto& f : *it) {
      std::vector<Subset> members;
      for (const auto& s : f) members.push_back(parse_subset(in.set_carrier(), s));
      in.families.push_back(std::move(members));
    }
  }
  return in;
}

Json ClaimReport::to_json() const {
  Json doc;
  doc["id"] = id;
  doc["statement"] = statement;
  doc["kind"] = to_string(kind);
  doc["must_hold"] = must_hold;
  doc["status"] = to_string(status);
  Json scope;
  scope["sizes"] = sizes;
  scope["mode"] = mode;
  scope["seed"] = seed ? Json(*seed) : Json(nullptr);
  scope["instances"] = instances;
  doc["scope"] = std::move(scope);
  Json tally;
  tally["holding"] = holding;
  tally["failing"] = failing;
  tally["degenerate"] = degenerate;
  doc["tally"] = std::move(tally);
  doc["witnesses"] = witnesses;
  Json ns = Json::array();
  for (const auto& [note, n] : notes) {
    Json e;
    e["note"] = note;
    e["count"] = n;
    ns.push_back(std::move(e));
  }
  doc["notes"] = std::move(ns);
  return doc;
}

std::size_t default_workers() {
  if (const char* env = std::getenv("CONVLAB_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Rng claim_rng(const ClaimContext& ctx, const std::string& id) { return Rng(ctx.seed ^ fnv1a(id)); }

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::size_t effective_size(const ClaimContext& ctx, std::size_t fallback) {
  return std::min(ctx.size.value_or(fallback), ctx.bounds.max_carrier);
}

const std::vector<Convergence>& corpus(std::size_t n, SpaceClass c) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, SpaceClass>, std::vector<Convergence>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, c);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate(n, c)).first;
  return it->second;
}

const std::vector<AtomMap>& maps_between(std::size_t n, std::size_t k, bool surjective_only) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, bool>, std::vector<AtomMap>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, surjective_only);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<AtomMap> out;
    for (auto& f : all_maps(Carrier::lettered(n), Carrier::lettered(k))) {
      if (!surjective_only || f.is_surjective()) out.push_back(f);
    }
    it = cache.emplace(key, std::move(out)).first;
  }
  return it->second;
}

// Each atom converges along the nonempty kernels inside one of a few random
// generators (its singleton among them).
Convergence random_convergence(std::size_t n, Rng& rng) {
  const Carrier c = Carrier::lettered(n);
  const Subset::Bits rows = static_cast<Subset::Bits>(c.powerset_size());
  std::vector<Subset> table(rows);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Subset> gens{Subset::atom(x)};
    const std::size_t extra = pick(rng, 4);
    for (std::size_t i = 0; i < extra; ++i) gens.emplace_back(static_cast<Subset::Bits>(1 + pick(rng, rows - 1)));
    for (Subset::Bits k = 1; k < rows; ++k) {
      for (auto g : gens) {
        if (Subset(k).is_subset_of(g)) {
          table[k] |= Subset::atom(x);
          break;
        }
      }
    }
  }
  return Convergence(c, std::move(table));
}

Convergence random_pretopology(std::size_t n, Rng& rng) {
  const Carrier c = Carrier::lettered(n);
  std::vector<Subset> vic(n);
  for (std::size_t x = 0; x < n; ++x) {
    vic[x] = Subset(static_cast<Subset::Bits>(pick(rng, c.powerset_size()))) | Subset::atom(x);
  }
  return Convergence::from_vicinities(c, vic);
}

/// Uniform over the enumerated corpus when it exists, random tables beyond.
Convergence sample_space(std::size_t n, Rng& rng) {
  if (n <= enumeration_limit(SpaceClass::convergence)) {
    const auto& all = corpus(n, SpaceClass::convergence);
    return all[pick(rng, all.size())];
  }
  return random_convergence(n, rng);
}

Convergence relabeled(const Convergence& xi, const Carrier& to) {
  return Convergence(to, xi.table());
}

Instance space_instance(const std::string& tag, Convergence xi) {
  Instance in;
  in.tag = tag;
  in.spaces.push_back(std::move(xi));
  return in;
}

Instance pair_instance(Convergence a, Convergence b) {
  Instance in;
  in.tag = "pair";
  in.spaces = {std::move(a), std::move(b)};
  return in;
}

Instance map_instance(const std::string& tag, Convergence dom, Convergence cod, const AtomMap& f) {
  Instance in;
  in.tag = tag;
  in.spaces = {std::move(dom), std::move(cod)};
  in.maps.push_back(AtomMap(in.spaces[0].carrier(), in.spaces[1].carrier(), f.assignment()));
  return in;
}

SpaceMap space_map(const Instance& in) { return SpaceMap(in.spaces.at(0), in.spaces.at(1), in.maps.at(0)); }

class Builder {
 public:
  void add(std::size_t count, std::function<Instance(std::size_t)> at) {
    if (count == 0) return;
    segs_.push_back({count, std::move(at)});
  }
  void add_list(std::vector<Instance> list) {
    auto shared = std::make_shared<std::vector<Instance>>(std::move(list));
    add(shared->size(), [shared](std::size_t i) { return (*shared)[i]; });
  }
  Generated finish(std::vector<std::size_t> sizes, std::string mode, bool seeded) {
    Generated g;
    auto segs = std::make_shared<std::vector<Seg>>(std::move(segs_));
    for (const auto& s : *segs) g.count += s.count;
    g.at = [segs](std::size_t i) {
      for (const auto& s : *segs) {
        if (i < s.count) return s.at(i);
        i -= s.count;
      }
      throw InvariantViolation("instance index out of range");
    };
    g.sizes = std::move(sizes);
    g.mode = std::move(mode);
    g.seeded = seeded;
    return g;
  }

 private:
  struct Seg {
    std::size_t count;
    std::function<Instance(std::size_t)> at;
  };
  std::vector<Seg> segs_;
};

std::vector<std::size_t> sizes_up_to(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

Check verdict(bool ok, std::string note = {}) { return {ok ? Outcome::holds : Outcome::fails, std::move(note)}; }

// ---- generators ------------------------------------------------------------

// Every convergence up to the exhaustive limit, then samples above it.
Generated single_spaces(const ClaimContext& ctx, const std::string& id, std::size_t fallback, bool with_fixtures) {
  const std::size_t top = effective_size(ctx, fallback);
  Builder b;
  const std::size_t exhaustive = std::min(top, enumeration_limit(SpaceClass::convergence));
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    const auto& all = corpus(n, SpaceClass::convergence);
    b.add(all.size(), [&all](std::size_t i) { return space_instance("space", all[i]); });
  }
  if (with_fixtures) {
    std::vector<Instance> fx;
    for (const auto& f : fixtures::all()) fx.push_back(space_instance(f.name, f.space));
    b.add_list(std::move(fx));
  }
  bool sampled = false;
  if (top > exhaustive) {
    Rng rng = claim_rng(ctx, id);
    std::vector<Instance> s;
    for (std::size_t i = 0; i < ctx.samples; ++i) {
      const std::size_t n = exhaustive + 1 + pick(rng, top - exhaustive);
      s.push_back(space_instance("sample", random_convergence(n, rng)));
    }
    b.add_list(std::move(s));
    sampled = true;
  }
  return b.finish(sizes_up_to(1, top), sampled ? "exhaustive+sampled" : "exhaustive", sampled);
}

// Exhaustive over 2-atom pairs; sampled 2×3 and 3×2 pairs at size 3 and up.
Generated space_pairs(const ClaimContext& ctx, const std::string& id, std::size_t fallback) {
  const std::size_t top = effective_size(ctx, fallback);
  Builder b;
  const auto& two = corpus(2, SpaceClass::convergence);
  b.add(two.size() * two.size(), [&two](std::size_t i) { return pair_instance(two[i / two.size()], two[i % two.size()]); });
  bool sampled = false;
  if (top >= 3) {
    Rng rng = claim_rng(ctx, id);
    std::vector<Instance> s;
    for (std::size_t i = 0; i < ctx.samples; ++i) {
      std::size_t na = 2, nb = 3;
      if (top > 3) nb = 3 + pick(rng, std::min<std::size_t>(top, ctx.bounds.max_product / 2) - 2);
      if (i % 2 == 1) std::swap(na, nb);
      Convergence a = sample_space(na, rng);
      Convergence c = sample_space(nb, rng);
      s.push_back(pair_instance(std::move(a), std::move(c)));
    }
    b.add_list(std::move(s));
    sampled = true;
  }
  return b.finish(sizes_up_to(2, std::max<std::size_t>(2, std::min<std::size_t>(top, 3))),
                  sampled ? "exhaustive+sampled" : "exhaustive", sampled);
}

// f : X → Y with τ on Y, tagged by the functor under test.
Generated initial_maps(const ClaimContext& ctx, const std::string& id, const std::vector<std::string>& tags) {
  const std::size_t top = effective_size(ctx, 3);
  Builder b;
  const auto& two = corpus(2, SpaceClass::convergence);
  const auto& fs = maps_between(2, 2, false);
  const std::size_t per_tag = two.size() * fs.size();
  b.add(per_tag * tags.size(), [&two, &fs, tags, per_tag](std::size_t i) {
    const std::string& tag = tags[i / per_tag];
    i %= per_tag;
    Instance in;
    in.tag = tag;
    in.spaces.push_back(two[i / fs.size()]);
    in.maps.push_back(fs[i % fs.size()]);
    return in;
  });
  bool sampled = false;
  if (top >= 3) {
    Rng rng = claim_rng(ctx, id);
    std::vector<Instance> s;
    for (std::size_t i = 0; i < ctx.samples; ++i) {
      const std::size_t nx = i % 2 == 0 ? 2 : 3;
      const std::size_t ny = 5 - nx;
      Instance in;
      in.tag = tags[pick(rng, tags.size())];
      in.spaces.push_back(sample_space(ny, rng));
      const auto& m = maps_between(nx, ny, false);
      in.maps.push_back(m[pick(rng, m.size())]);
      s.push_back(std::move(in));
    }
    b.add_list(std::move(s));
    sampled = true;
  }
  return b.finish(top >= 3 ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{2},
                  sampled ? "exhaustive+sampled" : "exhaustive", sampled);
}

// Surjections between 2-atom convergences, plus sampled 3-atom domains.
Generated surjections(const ClaimContext& ctx, const std::string& id, std::size_t fallback) {
  const std::size_t top = effective_size(ctx, fallback);
  Builder b;
  const auto& two = corpus(2, SpaceClass::convergence);
  const auto& fs = maps_between(2, 2, true);
  b.add(two.size() * two.size() * fs.size(), [&two, &fs](std::size_t i) {
    const std::size_t f = i % fs.size();
    i /= fs.size();
    return map_instance("map", two[i / two.size()], two[i % two.size()], fs[f]);
  });
  bool sampled = false;
  if (top >= 3) {
    Rng rng = claim_rng(ctx, id);
    std::vector<Instance> s;
    for (std::size_t i = 0; i < ctx.samples; ++i) {
      const std::size_t nc = 2 + pick(rng, 2);
      const auto& m = maps_between(3, nc, true);
      Convergence dom = sample_space(3, rng);
      Convergence cod = sample_space(nc, rng);
      s.push_back(map_instance("map", std::move(dom), std::move(cod), m[pick(rng, m.size())]));
    }
    b.add_list(std::move(s));
    sampled = true;
  }
  return b.finish(top >= 3 ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{2},
                  sampled ? "exhaustive+sampled" : "exhaustive", sampled);
}

// Every surjection between members of a class, domain size ≥ codomain size,
// both within [2, top]; enumerated lazily in (sizes, domain, codomain, map) order.
Generated class_surjections(std::size_t top, SpaceClass c, const std::string& tag) {
  Builder b;
  for (std::size_t nd = 2; nd <= top; ++nd) {
    for (std::size_t nc = 2; nc <= nd; ++nc) {
      const auto& doms = corpus(nd, c);
      const auto& cods = corpus(nc, c);
      const auto& fs = maps_between(nd, nc, true);
      b.add(doms.size() * cods.size() * fs.size(), [&doms, &cods, &fs, tag](std::size_t i) {
        const std::size_t f = i % fs.size();
        i /= fs.size();
        return map_instance(tag, doms[i / cods.size()], cods[i % cods.size()], fs[f]);
      });
    }
  }
  return b.finish(sizes_up_to(2, top), "exhaustive", false);
}

std::vector<Instance> fixture_pairs(const std::vector<fixtures::NamedFixture>& dualizers) {
  std::vector<Instance> out;
  for (const auto& x : fixtures::all()) {
    for (const auto& d : dualizers) {
      Instance in = pair_instance(x.space, d.space);
      in.tag = x.name + "/" + d.name;
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::vector<fixtures::NamedFixture> standard_dualizers() {
  return {{"SIER", fixtures::sierpinski()}, {"BOUR", fixtures::bourdaud()}};
}

// ---- predicates -------------------------------------------------------------

bool paving_one_everywhere(const Convergence& xi) {
  for (std::size_t x = 0; x < xi.size(); ++x) {
    if (paving(xi, x).paving_number != 1) return false;
  }
  return true;
}

FunctorTag tag_of(const std::string& s) {
  auto t = functor_tag_from_string(s);
  if (!t) throw InputError("unknown functor tag '" + s + "'");
  return *t;
}

Check check_initial_commutation(const Instance& in) {
  const FunctorTag j = tag_of(in.tag);
  const Convergence& tau = in.spaces.at(0);
  const AtomMap f(in.maps.at(0).domain(), tau.carrier(), in.maps.at(0).assignment());
  return verdict(reflect(initial(f, tau), j) == initial(f, reflect(tau, j)));
}

Check check_product_commutation(const Instance& in, const Bounds& bounds, FunctorTag j) {
  const auto& a = in.spaces.at(0);
  const auto& b = in.spaces.at(1);
  return verdict(reflect(product(a, b, bounds), j) == product(reflect(a, j), reflect(b, j), bounds));
}

std::size_t open_set_count(const Convergence& tau) {
  std::size_t n = 0;
  for (Subset::Bits a = 0; a < tau.carrier().powerset_size(); ++a) n += is_open(tau, Subset(a)) ? 1 : 0;
  return n;
}

// ---- registry ----------------------------------------------------------------

struct ExpectedCount {
  SpaceClass c;
  std::size_t n;
  std::size_t count;
};

constexpr ExpectedCount kExpectedCounts[] = {
    {SpaceClass::convergence, 1, 1},    {SpaceClass::convergence, 2, 9},   {SpaceClass::convergence, 3, 2744},
    {SpaceClass::pretopology, 1, 1},    {SpaceClass::pretopology, 2, 4},   {SpaceClass::pretopology, 3, 64},
    {SpaceClass::pretopology, 4, 4096}, {SpaceClass::topology, 1, 1},      {SpaceClass::topology, 2, 4},
    {SpaceClass::topology, 3, 29},      {SpaceClass::topology, 4, 355},
};

std::vector<Claim> build_registry() {
  std::vector<Claim> r;

  r.push_back({"enumeration-counts", "class counts on small carriers match their closed-form values",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = effective_size(ctx, 4);
                 std::vector<Instance> list;
                 for (const auto& e : kExpectedCounts) {
                   if (e.n > top) continue;
                   Instance in;
                   in.tag = to_string(e.c);
                   in.params = {static_cast<std::int64_t>(e.n), static_cast<std::int64_t>(e.count)};
                   list.push_back(std::move(in));
                 }
                 Builder b;
                 b.add_list(std::move(list));
                 return b.finish(sizes_up_to(1, std::min<std::size_t>(top, 4)), "exhaustive", false);
               },
               [](const Instance& in, const Bounds&) {
                 const auto c = space_class_from_string(in.tag);
                 if (!c) throw InputError("unknown class " + in.tag);
                 const std::size_t got = count(static_cast<std::size_t>(in.params.at(0)), *c);
                 return verdict(got == static_cast<std::size_t>(in.params.at(1)), "enumerated " + std::to_string(got));
               }});

  r.push_back({"pretopology-paving", "a convergence is a pretopology iff its paving number is 1 at every point",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return single_spaces(ctx, "pretopology-paving", 3, true); },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 return verdict(is_pretopology(xi) == paving_one_everywhere(xi));
               }});

  r.push_back({"topology-idempotent-adherence", "a pretopology is a topology iff its adherence is idempotent",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = effective_size(ctx, 4);
                 Builder b;
                 const std::size_t exhaustive = std::min(top, enumeration_limit(SpaceClass::pretopology));
                 for (std::size_t n = 1; n <= exhaustive; ++n) {
                   const auto& all = corpus(n, SpaceClass::pretopology);
                   b.add(all.size(), [&all](std::size_t i) { return space_instance("pretopology", all[i]); });
                 }
                 bool sampled = false;
                 if (top > exhaustive) {
                   Rng rng = claim_rng(ctx, "topology-idempotent-adherence");
                   std::vector<Instance> s;
                   for (std::size_t i = 0; i < ctx.samples; ++i) {
                     s.push_back(space_instance("pretopology", random_pretopology(exhaustive + 1 + pick(rng, top - exhaustive), rng)));
                   }
                   b.add_list(std::move(s));
                   sampled = true;
                 }
                 return b.finish(sizes_up_to(1, top), sampled ? "exhaustive+sampled" : "exhaustive", sampled);
               },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 if (!is_pretopology(xi)) return Check{Outcome::degenerate, "not a pretopology"};
                 return verdict(is_topology(xi) == is_adherence_idempotent(xi));
               }});

  r.push_back({"finite-collapse",
               "S0 and S agree rowwise on finite carriers, so every finite pseudotopology is a pretopology",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return single_spaces(ctx, "finite-collapse", 3, true); },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 const bool same = reflect(xi, FunctorTag::S0) == reflect(xi, FunctorTag::S);
                 const bool collapse = !is_pseudotopology(xi) || is_pretopology(xi);
                 return verdict(same && collapse, same ? (collapse ? "" : "pseudotopology that is not a pretopology")
                                                       : "S0 and S differ");
               }});

  r.push_back({"S-product-commutation", "S(ξ×τ) = Sξ × Sτ", ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return space_pairs(ctx, "S-product-commutation", 3); },
               [](const Instance& in, const Bounds& b) { return check_product_commutation(in, b, FunctorTag::S); }});

  r.push_back({"AH-initial-commutation", "A_H(f⁻τ) = f⁻(A_H τ) for H in {F0, F}", ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return initial_maps(ctx, "AH-initial-commutation", {"A_F0", "A_F"}); },
               [](const Instance& in, const Bounds&) { return check_initial_commutation(in); }});

  r.push_back({"adherence-consistency",
               "the vicinity formula for adh A equals the meshing-filter formula on the family {A}",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = effective_size(ctx, 3);
                 Builder b;
                 const auto& two = corpus(2, SpaceClass::convergence);
                 b.add(two.size() * 4, [&two](std::size_t i) {
                   Instance in = space_instance("space-set", two[i / 4]);
                   in.sets.emplace_back(static_cast<Subset::Bits>(i % 4));
                   return in;
                 });
                 bool sampled = false;
                 if (top >= 3) {
                   Rng rng = claim_rng(ctx, "adherence-consistency");
                   std::vector<Instance> s;
                   for (std::size_t i = 0; i < ctx.samples; ++i) {
                     const std::size_t n = 3 + pick(rng, top - 2);
                     Instance in = space_instance("space-set", sample_space(n, rng));
                     in.sets.emplace_back(static_cast<Subset::Bits>(pick(rng, std::size_t{1} << n)));
                     s.push_back(std::move(in));
                   }
                   b.add_list(std::move(s));
                   sampled = true;
                 }
                 return b.finish(sizes_up_to(2, std::max<std::size_t>(top, 2)), sampled ? "exhaustive+sampled" : "exhaustive", sampled);
               },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 const Subset a = in.sets.at(0);
                 return verdict(adh_set(xi, a) == adh_family(xi, SubsetFamily(xi.carrier(), {a})));
               }});

  r.push_back({"cover-criterion", "P is an A-cover iff adh of the complement family misses A",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = effective_size(ctx, 2);
                 Builder b;
                 const auto& two = corpus(2, SpaceClass::convergence);
                 // 16 families of subsets of a 2-atom carrier, 4 sets.
                 b.add(two.size() * 16 * 4, [&two](std::size_t i) {
                   const std::size_t set = i % 4;
                   const std::size_t fam = (i / 4) % 16;
                   Instance in = space_instance("cover", two[i / 64]);
                   std::vector<Subset> members;
                   for (Subset::Bits s = 0; s < 4; ++s) {
                     if ((fam >> s) & 1U) members.emplace_back(s);
                   }
                   in.families.push_back(std::move(members));
                   in.sets.emplace_back(static_cast<Subset::Bits>(set));
                   return in;
                 });
                 bool sampled = false;
                 if (top >= 3) {
                   Rng rng = claim_rng(ctx, "cover-criterion");
                   std::vector<Instance> s;
                   for (std::size_t i = 0; i < ctx.samples; ++i) {
                     const std::size_t n = 3 + pick(rng, std::min<std::size_t>(top, 4) - 2);
                     const std::size_t subsets = std::size_t{1} << n;
                     Instance in = space_instance("cover", sample_space(n, rng));
                     std::vector<Subset> members;
                     for (std::size_t k = 0; k < subsets; ++k) {
                       if (rng() & 1U) members.emplace_back(static_cast<Subset::Bits>(k));
                     }
                     in.families.push_back(std::move(members));
                     in.sets.emplace_back(static_cast<Subset::Bits>(pick(rng, subsets)));
                     s.push_back(std::move(in));
                   }
                   b.add_list(std::move(s));
                   sampled = true;
                 }
                 return b.finish(sizes_up_to(2, std::max<std::size_t>(std::min<std::size_t>(top, 4), 2)),
                                 sampled ? "exhaustive+sampled" : "exhaustive", sampled);
               },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 const SubsetFamily p(xi.carrier(), in.families.at(0));
                 const auto c = check_cover(xi, p, in.sets.at(0));
                 return verdict(c.definition == c.criterion);
               }});

  r.push_back({"tikhonov-characteristic",
               "χ(ξ×τ) = χξ × χτ, S(χξ × χτ) = Sχξ × Sχτ, and product compactoidness splits by coordinates",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return space_pairs(ctx, "tikhonov-characteristic", 2); },
               [](const Instance& in, const Bounds& b) {
                 const auto t = tikhonov_check(in.spaces.at(0), in.spaces.at(1), b);
                 std::string note;
                 if (!t.characteristic_of_product) note += "characteristic-of-product ";
                 if (!t.s_commutes) note += "S-commutation ";
                 if (!t.compactoid_biconditional) note += "compactoid-split ";
                 return verdict(t.holds(), note);
               }});

  r.push_back({"quotient-flag-chain",
               "almost open ⇒ biquotient ⇒ countably biquotient ⇒ hereditarily quotient ⇒ quotient, with the perfect-map implications",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return surjections(ctx, "quotient-flag-chain", 2); },
               [](const Instance& in, const Bounds&) {
                 const auto c = classify(space_map(in));
                 std::string note;
                 for (const auto& f : c.implication_failures) note += f + "; ";
                 return verdict(c.implication_failures.empty(), note);
               }});

  r.push_back({"expanded-quotient-agreement", "the adherence form of H-quotient agrees with τ ≥ A_H(fξ)",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return surjections(ctx, "expanded-quotient-agreement", 2); },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 const std::pair<FilterClass, FunctorTag> levels[] = {{FilterClass::principal, FunctorTag::A_F0},
                                                                      {FilterClass::countably_based, FunctorTag::A_F1},
                                                                      {FilterClass::all, FunctorTag::A_F}};
                 for (const auto& [h, j] : levels) {
                   if (expanded_quotient(m, h) != is_J_quotient(m, j)) {
                     return verdict(false, std::string("disagreement for ") + to_string(h));
                   }
                 }
                 return verdict(true);
               }});

  r.push_back({"perfect-implies-quotient", "an H-perfect surjection is H-quotient", ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return surjections(ctx, "perfect-implies-quotient", 2); },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 bool any = false;
                 for (auto h : {FilterClass::principal, FilterClass::countably_based, FilterClass::all}) {
                   if (!expanded_perfect(m, h)) continue;
                   any = true;
                   if (!expanded_quotient(m, h)) return verdict(false, std::string("perfect, not quotient: ") + to_string(h));
                 }
                 return verdict(true, any ? "perfect" : "not perfect");
               }});

  r.push_back({"perfect-closed-oracle", "between finite topologies, F-perfect surjections are exactly the closed ones",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 return class_surjections(std::min<std::size_t>(effective_size(ctx, 3), 4), SpaceClass::topology, "map");
               },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 return verdict(expanded_perfect(m, FilterClass::all) == is_closed_map(m));
               }});

  r.push_back({"strictness-witnesses",
               "stored maps separate quotient from hereditarily quotient and hereditarily quotient from almost open",
               ClaimKind::universal, true,
               [](const ClaimContext&) {
                 const SpaceMap q = fixtures::quotient_not_hereditarily_quotient();
                 const SpaceMap h = fixtures::hereditarily_quotient_not_almost_open();
                 Builder b;
                 b.add_list({map_instance("quotient-not-hereditarily-quotient", q.domain(), q.codomain(), q.map()),
                             map_instance("hereditarily-quotient-not-almost-open", h.domain(), h.codomain(), h.map())});
                 return b.finish({4, 3}, "exhaustive", false);
               },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 if (!is_continuous(m)) return verdict(false, "not continuous");
                 if (in.tag == "quotient-not-hereditarily-quotient") {
                   return verdict(is_J_quotient(m, FunctorTag::T) && !is_J_quotient(m, FunctorTag::S0));
                 }
                 if (in.tag == "hereditarily-quotient-not-almost-open") {
                   return verdict(is_J_quotient(m, FunctorTag::S0) && !is_J_quotient(m, FunctorTag::I));
                 }
                 throw InputError("unknown witness tag " + in.tag);
               }});

  r.push_back({"duality-inequality", "ξ × [ξ,σ] ≥ ev⁻σ for every pair of fixtures", ClaimKind::universal, true,
               [](const ClaimContext&) {
                 Builder b;
                 b.add_list(fixture_pairs(fixtures::all()));
                 return b.finish({2, 3}, "exhaustive", false);
               },
               [](const Instance& in, const Bounds& bounds) {
                 const auto& xi = in.spaces.at(0);
                 const auto& sigma = in.spaces.at(1);
                 const FunctionSpace fs = function_space(xi, sigma, bounds, bounds.max_epi_functions);
                 if (fs.size() > kMaxAtoms) {
                   return verdict(duality_inequality_streaming(fs, bounds),
                                  "streamed over " + std::to_string(fs.size()) + " functions");
                 }
                 const DualConvergence d = dual(fs);
                 if (!duality_inequality_holds(fs, d.table)) return verdict(false, "rectangle check fails");
                 if (xi.size() * fs.size() <= bounds.max_product) {
                   const Convergence prod = product(xi, d.table, bounds);
                   const AtomMap ev = evaluation_map(fs, prod.carrier());
                   if (!is_finer(prod, initial(ev, sigma))) return verdict(false, "materialized product check fails");
                   return verdict(true, "materialized product");
                 }
                 return verdict(true, "rectangles");
               }});

  r.push_back({"dual-coarsest",
               "every θ on C(ξ,σ) with ξ × θ ≥ ev⁻σ is finer than [ξ,σ]", ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 struct Eligible {
                   Convergence xi, sigma;
                   Carrier c;
                   std::size_t m;
                 };
                 auto small = std::make_shared<std::vector<Eligible>>();
                 std::vector<Eligible> larger;
                 std::vector<Convergence> sources = corpus(2, SpaceClass::convergence);
                 for (const auto& f : fixtures::all()) sources.push_back(f.space);
                 for (const auto& xi : sources) {
                   for (const auto& d : standard_dualizers()) {
                     std::optional<FunctionSpace> fs;
                     try {
                       fs = function_space(xi, d.space, ctx.bounds);
                     } catch (const BoundExceeded&) {
                       continue;
                     }
                     Eligible e{xi, d.space, fs->carrier(), fs->size()};
                     if (fs->size() <= 3) {
                       small->push_back(std::move(e));
                     } else if (fs->size() <= 8) {
                       larger.push_back(std::move(e));
                     }
                   }
                 }
                 Builder b;
                 // Exhaustive θ enumeration for |C| ≤ 3.
                 std::vector<std::size_t> offsets;
                 std::size_t total = 0;
                 for (const auto& e : *small) {
                   offsets.push_back(total);
                   total += corpus(e.m, SpaceClass::convergence).size();
                 }
                 b.add(total, [small, offsets](std::size_t i) {
                   const std::size_t p =
                       static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), i) - offsets.begin()) - 1;
                   const auto& e = (*small)[p];
                   const auto& thetas = corpus(e.m, SpaceClass::convergence);
                   Instance in;
                   in.tag = "theta";
                   in.spaces = {e.xi, e.sigma, relabeled(thetas[i - offsets[p]], e.c)};
                   return in;
                 });
                 Rng rng = claim_rng(ctx, "dual-coarsest");
                 std::vector<Instance> s;
                 if (!larger.empty()) {
                   const std::size_t n = std::max<std::size_t>(ctx.samples / 5, 1);
                   for (std::size_t i = 0; i < n; ++i) {
                     const auto& e = larger[pick(rng, larger.size())];
                     Instance in;
                     in.tag = "theta";
                     in.spaces = {e.xi, e.sigma, relabeled(random_convergence(e.m, rng), e.c)};
                     s.push_back(std::move(in));
                   }
                 }
                 b.add_list(std::move(s));
                 return b.finish({2, 3}, "exhaustive+sampled", true);
               },
               [](const Instance& in, const Bounds& bounds) {
                 const FunctionSpace fs = function_space(in.spaces.at(0), in.spaces.at(1), bounds);
                 const Convergence theta(fs.carrier(), in.spaces.at(2).table());
                 if (!duality_inequality_holds(fs, theta)) return verdict(true, "inequality fails for θ");
                 return verdict(is_finer(theta, dual(fs).table), "inequality holds for θ");
               }});

  r.push_back({"bourdaud-epi", "Epi^¥ ξ = S0 ξ", ClaimKind::universal, true,
               [](const ClaimContext&) {
                 Builder b;
                 const auto& two = corpus(2, SpaceClass::convergence);
                 b.add(two.size(), [&two](std::size_t i) { return space_instance("space", two[i]); });
                 b.add_list({space_instance("NP3", fixtures::np3()), space_instance("PT3", fixtures::pt3())});
                 return b.finish({2, 3}, "exhaustive", false);
               },
               [](const Instance& in, const Bounds& bounds) {
                 const auto& xi = in.spaces.at(0);
                 const EpiResult e = bidual_and_epi(xi, fixtures::bourdaud(), bounds);
                 return verdict(e.epi == reflect(xi, FunctorTag::S0),
                                e.bidual ? "bidual materialized" : "bidual streamed");
               }});

  r.push_back({"hyperspace-count", "|C(τ,$)| equals the number of open sets of τ", ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = std::min<std::size_t>(effective_size(ctx, 3), 4);
                 Builder b;
                 for (std::size_t n = 1; n <= top; ++n) {
                   const auto& all = corpus(n, SpaceClass::topology);
                   b.add(all.size(), [&all](std::size_t i) { return space_instance("topology", all[i]); });
                 }
                 return b.finish(sizes_up_to(1, top), "exhaustive", false);
               },
               [](const Instance& in, const Bounds& bounds) {
                 const auto& tau = in.spaces.at(0);
                 Bounds b = bounds;
                 b.max_functions = std::max<std::size_t>(b.max_functions, tau.carrier().powerset_size());
                 const std::size_t fs = function_space(tau, fixtures::sierpinski(), b).size();
                 const std::size_t open = open_set_count(tau);
                 return verdict(fs == open, std::to_string(fs) + " maps, " + std::to_string(open) + " open sets");
               }});

  r.push_back({"reflector-laws",
               "I, S0, S, T and A_H are concrete, descending, idempotent, increasing and preserve continuity",
               ClaimKind::universal, true,
               [](const ClaimContext&) {
                 std::vector<Instance> list;
                 for (const char* t : {"I", "S0", "S", "T", "A_F0", "A_F1", "A_F"}) {
                   Instance in;
                   in.tag = t;
                   list.push_back(std::move(in));
                 }
                 Builder b;
                 b.add_list(std::move(list));
                 return b.finish({2, 3}, "exhaustive", false);
               },
               [](const Instance& in, const Bounds&) {
                 FunctorCorpus c;
                 c.spaces = corpus(2, SpaceClass::convergence);
                 for (const auto& f : fixtures::all()) c.spaces.push_back(f.space);
                 const auto& two = corpus(2, SpaceClass::convergence);
                 for (const auto& a : two)
                   for (const auto& b : two)
                     for (const auto& f : maps_between(2, 2, false)) c.maps.emplace_back(a, b, f);
                 const LawReport rep = check_functor_laws(functor(tag_of(in.tag)), c);
                 std::string note;
                 for (const auto& l : rep.laws) {
                   if (l.asserted && !l.holds) note += l.law + ": " + l.witness + "; ";
                 }
                 return verdict(rep.ok(), note);
               }});

  r.push_back({"closure-agreement", "iterated adherence reaches the least adh-closed superset",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) { return single_spaces(ctx, "closure-agreement", 3, true); },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 for (Subset::Bits a = 0; a < xi.carrier().powerset_size(); ++a) {
                   if (closure(xi, Subset(a)) != closure_by_intersection(xi, Subset(a))) {
                     return verdict(false, "differs at " + xi.carrier().format(Subset(a)));
                   }
                 }
                 return verdict(true);
               }});

  r.push_back({"compactoid-characteristic", "K↑ is compactoid iff lim of K under Sχξ is nonempty", ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = std::min<std::size_t>(effective_size(ctx, 3), 3);
                 Builder b;
                 for (std::size_t n = 1; n <= top; ++n) {
                   const auto& all = corpus(n, SpaceClass::convergence);
                   const std::size_t kernels = (std::size_t{1} << n) - 1;
                   b.add(all.size() * kernels, [&all, kernels](std::size_t i) {
                     Instance in = space_instance("space-kernel", all[i / kernels]);
                     in.sets.emplace_back(static_cast<Subset::Bits>(1 + i % kernels));
                     return in;
                   });
                 }
                 return b.finish(sizes_up_to(1, top), "exhaustive", false);
               },
               [](const Instance& in, const Bounds&) {
                 const auto v = compactoid_filter(in.spaces.at(0), in.sets.at(0));
                 return verdict(v.definitional == v.characteristic);
               }});

  r.push_back({"kappa-laws", "the isotone ξ-compact families contain ∅ and 2^X and are closed under ∪ and ∩",
               ClaimKind::universal, true,
               [](const ClaimContext& ctx) {
                 const std::size_t top = std::min<std::size_t>(effective_size(ctx, 3), ctx.bounds.max_kappa_carrier);
                 Builder b;
                 const std::size_t exhaustive = std::min<std::size_t>(top, 3);
                 for (std::size_t n = 1; n <= exhaustive; ++n) {
                   const auto& all = corpus(n, SpaceClass::convergence);
                   b.add(all.size(), [&all](std::size_t i) { return space_instance("space", all[i]); });
                 }
                 bool sampled = false;
                 if (top > exhaustive) {
                   Rng rng = claim_rng(ctx, "kappa-laws");
                   std::vector<Instance> s;
                   for (std::size_t i = 0; i < std::max<std::size_t>(ctx.samples / 50, 1); ++i) {
                     s.push_back(space_instance("sample", random_convergence(top, rng)));
                   }
                   b.add_list(std::move(s));
                   sampled = true;
                 }
                 return b.finish(sizes_up_to(1, top), sampled ? "exhaustive+sampled" : "exhaustive", sampled);
               },
               [](const Instance& in, const Bounds& b) { return verdict(kappa(in.spaces.at(0), b).laws_hold()); }});

  // Existence searches.
  auto existence = [](const std::string& id, const std::string& statement, FunctorTag holds, FunctorTag fails) {
    return Claim{id, statement, ClaimKind::existence, false,
                 [](const ClaimContext& ctx) {
                   return class_surjections(std::min<std::size_t>(effective_size(ctx, 3), 3), SpaceClass::convergence,
                                            "map");
                 },
                 [holds, fails](const Instance& in, const Bounds&) {
                   const SpaceMap m = space_map(in);
                   const bool hit = is_continuous(m) && is_J_quotient(m, holds) && !is_J_quotient(m, fails);
                   return verdict(hit);
                 }};
  };
  r.push_back(existence("quotient-not-hereditarily-quotient",
                        "some continuous surjection is quotient but not hereditarily quotient", FunctorTag::T,
                        FunctorTag::S0));
  r.push_back(existence("hereditarily-quotient-not-almost-open",
                        "some continuous surjection is hereditarily quotient but not almost open", FunctorTag::S0,
                        FunctorTag::I));

  // Search mode: displayed statements that are probed, not asserted.
  r.push_back({"T-product-commutation", "T(ξ×τ) = Tξ × Tτ", ClaimKind::search, false,
               [](const ClaimContext& ctx) { return space_pairs(ctx, "T-product-commutation", 2); },
               [](const Instance& in, const Bounds& b) { return check_product_commutation(in, b, FunctorTag::T); }});

  r.push_back({"T-initial-commutation", "T(f⁻τ) = f⁻(Tτ)", ClaimKind::search, false,
               [](const ClaimContext& ctx) { return initial_maps(ctx, "T-initial-commutation", {"T"}); },
               [](const Instance& in, const Bounds&) { return check_initial_commutation(in); }});

  r.push_back({"literal-quotient-display", "f⁻(adh_τ H) ⊆ adh_ξ f⁻[H] for all H iff τ ≥ A_F(fξ)",
               ClaimKind::search, false,
               [](const ClaimContext& ctx) { return surjections(ctx, "literal-quotient-display", 3); },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 const bool literal = !expanded_quotient_literal_witness(m, FilterClass::all).has_value();
                 const bool quotient = is_J_quotient(m, FunctorTag::A_F);
                 return verdict(literal == quotient, m.map().is_injective() ? "injective" : "non-injective");
               }});

  r.push_back({"perfect-characteristic-display", "f⁻τ ≥ A_F(χξ) iff f is F-perfect", ClaimKind::search, false,
               [](const ClaimContext& ctx) { return surjections(ctx, "perfect-characteristic-display", 3); },
               [](const Instance& in, const Bounds&) {
                 const SpaceMap m = space_map(in);
                 return verdict(perfect_display_literal(m, FilterClass::all) == expanded_perfect(m, FilterClass::all));
               }});

  r.push_back({"hyperspace-orientation",
               "χ_A ∈ C(τ,$) with A the value-1 fiber exactly when A is closed", ClaimKind::search, false,
               [](const ClaimContext& ctx) {
                 const std::size_t top = std::min<std::size_t>(effective_size(ctx, 3), 4);
                 Builder b;
                 for (std::size_t n = 1; n <= top; ++n) {
                   const auto& all = corpus(n, SpaceClass::topology);
                   b.add(all.size(), [&all](std::size_t i) { return space_instance("topology", all[i]); });
                 }
                 return b.finish(sizes_up_to(1, top), "exhaustive", false);
               },
               [](const Instance& in, const Bounds& b) {
                 const auto o = hyperspace_orientation(in.spaces.at(0), b);
                 std::string note = std::string("value-1 fibers open: ") + (o.value1_fibers_are_open ? "yes" : "no") +
                                    ", closed: " + (o.value1_fibers_are_closed ? "yes" : "no");
                 return verdict(o.value1_fibers_are_closed, note);
               }});

  r.push_back({"epi-sierpinski-topologization", "Epi^$ ξ = Tξ", ClaimKind::search, false,
               [](const ClaimContext& ctx) { return single_spaces(ctx, "epi-sierpinski-topologization", 2, true); },
               [](const Instance& in, const Bounds& b) {
                 const auto& xi = in.spaces.at(0);
                 return verdict(epi(xi, fixtures::sierpinski(), b) == reflect(xi, FunctorTag::T));
               }});

  // Declared classes of fixtures, with PT3 deliberately declared a topology.
  r.push_back({"fault-declared-classes", "each fixture belongs to its declared class (PT3 is mis-declared)",
               ClaimKind::universal, true,
               [](const ClaimContext&) {
                 const std::pair<const char*, const char*> decl[] = {
                     {"DISC2", "topology"}, {"CHAOS2", "topology"}, {"DISC3", "topology"}, {"SIER", "topology"},
                     {"BOUR", "pretopology"}, {"NP3", "convergence"}, {"PT3", "topology"}};
                 std::vector<Instance> list;
                 for (const auto& [name, cls] : decl) {
                   for (const auto& f : fixtures::all()) {
                     if (f.name != name) continue;
                     Instance in = space_instance(cls, f.space);
                     list.push_back(std::move(in));
                   }
                 }
                 Builder b;
                 b.add_list(std::move(list));
                 return b.finish({2, 3}, "exhaustive", false);
               },
               [](const Instance& in, const Bounds&) {
                 const auto& xi = in.spaces.at(0);
                 if (in.tag == "topology") return verdict(is_topology(xi), "declared topology");
                 if (in.tag == "pretopology") return verdict(is_pretopology(xi), "declared pretopology");
                 return verdict(true, "declared convergence");
               }});
  return r;
}

template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, std::size_t workers, Fn&& fn) {
  const std::size_t n = end - begin;
  if (workers <= 1 || n < 64) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::vector<std::thread> pool;
  const std::size_t threads = std::min(workers, n);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < end; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

Check guarded(const Claim& claim, const Instance& in, const Bounds& bounds) {
  try {
    return claim.check(in, bounds);
  } catch (const BoundExceeded& e) {
    return {Outcome::degenerate, std::string("bound exceeded: ") + e.what()};
  } catch (const std::exception& e) {
    return {Outcome::fails, std::string("error: ") + e.what()};
  }
}

constexpr std::size_t kChunk = 8192;
constexpr std::size_t kMaxWitnesses = 3;

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> r = build_registry();
  return r;
}

const Claim& find_claim(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw InputError("unknown claim id '" + id + "'");
}

ClaimReport run_claim(const Claim& claim, const ClaimContext& ctx) {
  const Generated gen = claim.generate(ctx);
  ClaimReport r;
  r.id = claim.id;
  r.statement = claim.statement;
  r.kind = claim.kind;
  r.must_hold = claim.must_hold;
  r.sizes = gen.sizes;
  r.mode = gen.mode;
  if (gen.seeded) r.seed = ctx.seed;

  std::map<std::string, std::size_t> notes;
  bool found = false;
  for (std::size_t start = 0; start < gen.count && !found; start += kChunk) {
    const std::size_t end = std::min(gen.count, start + kChunk);
    std::vector<std::optional<Instance>> instances(end - start);
    std::vector<Check> checks(end - start);
    parallel_for(start, end, ctx.workers, [&](std::size_t i) {
      Instance in = gen.at(i);
      checks[i - start] = guarded(claim, in, ctx.bounds);
      if (checks[i - start].outcome != Outcome::degenerate) instances[i - start] = std::move(in);
    });
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const Check& c = checks[i];
      ++r.instances;
      if (!c.note.empty()) ++notes[c.note];
      if (c.outcome == Outcome::degenerate) {
        ++r.degenerate;
        continue;
      }
      if (c.outcome == Outcome::holds) {
        ++r.holding;
        if (claim.kind == ClaimKind::existence) {
          r.witnesses.push_back(serialize_instance(*instances[i]));
          found = true;
          break;
        }
      } else {
        ++r.failing;
        if (claim.kind != ClaimKind::existence && r.witnesses.size() < kMaxWitnesses) {
          r.witnesses.push_back(serialize_instance(*instances[i]));
        }
      }
    }
  }
  r.notes.assign(notes.begin(), notes.end());

  switch (claim.kind) {
    case ClaimKind::universal:
      if (r.failing > 0) {
        r.status = ClaimStatus::refuted;
      } else if (r.holding == 0) {
        r.status = ClaimStatus::skipped_degenerate;
      } else {
        r.status = ClaimStatus::verified;
      }
      break;
    case ClaimKind::existence:
      r.status = found ? ClaimStatus::verified : ClaimStatus::search_exhausted;
      break;
    case ClaimKind::search:
      r.status = ClaimStatus::search_exhausted;
      break;
  }
  return r;
}

Check replay(const Claim& claim, const Json& instance, const Bounds& bounds) {
  return guarded(claim, parse_instance(instance), bounds);
}

}  // namespace convlab::lab
