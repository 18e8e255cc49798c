#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "convlab/compactness.hpp"
#include "convlab/duality.hpp"
#include "convlab/fixtures.hpp"
#include "convlab/lab/claims.hpp"
#include "convlab/lab/document.hpp"
#include "convlab/lab/enumerate.hpp"
#include "convlab/lab/suite.hpp"
#include "convlab/maps.hpp"

using namespace convlab;
using lab::Json;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;
constexpr int kBoundExceeded = 3;

Bounds bounds_from_env() {
  Bounds b;
  if (const char* env = std::getenv("CONVLAB_MAX_CARRIER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("CONVLAB_MAX_CARRIER must be a positive integer");
    b.max_carrier = v;
  }
  return b;
}

struct Options {
  std::string format = "json";
  std::string file;
  std::string functor = "T";
  std::string set;
  std::string point;
  std::string dualizer = "sier";
  std::size_t size = 0;
  std::string cls = "convergence";
  bool count_only = false;
  std::string claim;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::string replay;
  std::string suite;
};

bool text(const Options& o) { return o.format == "text"; }

std::string table_text(const Convergence& xi) {
  std::ostringstream out;
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    out << xi.carrier().format(Subset(k)) << " -> " << xi.carrier().format(xi.table()[k]) << "\n";
  }
  return out.str();
}

Convergence load_space(const std::string& path, const Bounds& b) {
  return lab::parse_space_text(lab::read_file(path), b);
}

Subset parse_atom_list(const Carrier& c, const std::string& csv) {
  std::vector<std::string> names;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return c.subset(names);
}

Convergence dualizer(const std::string& name, const Bounds& b, bool allow_file) {
  if (name == "sier") return fixtures::sierpinski();
  if (name == "bour") return fixtures::bourdaud();
  if (!allow_file) throw InputError("dualizer must be sier or bour");
  return load_space(name, b);
}

void emit(const Options& o, const Json& doc, const std::string& txt) {
  if (text(o)) {
    std::cout << txt;
  } else {
    std::cout << lab::dump(doc);
  }
}

int cmd_validate(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  Json doc;
  doc["valid"] = true;
  doc["pretopology"] = is_pretopology(xi);
  doc["pseudotopology"] = is_pseudotopology(xi);
  doc["topology"] = is_topology(xi);
  doc["finitely_deep"] = is_finitely_deep(xi);
  doc["space"] = lab::serialize_space(xi);
  std::ostringstream t;
  t << "valid convergence on " << xi.carrier().format(xi.carrier().full()) << "\n"
    << "pretopology: " << (doc["pretopology"].get<bool>() ? "yes" : "no") << "\n"
    << "pseudotopology: " << (doc["pseudotopology"].get<bool>() ? "yes" : "no") << "\n"
    << "topology: " << (doc["topology"].get<bool>() ? "yes" : "no") << "\n"
    << "finitely deep: " << (doc["finitely_deep"].get<bool>() ? "yes" : "no") << "\n"
    << table_text(xi);
  emit(o, doc, t.str());
  return kOk;
}

int cmd_reflect(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const auto tag = functor_tag_from_string(o.functor);
  if (!tag) throw InputError("unknown functor '" + o.functor + "'");
  const Convergence out = any_functor(*tag, b)(xi);
  emit(o, lab::serialize_space(out), table_text(out));
  return kOk;
}

int cmd_adh(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const Subset a = parse_atom_list(xi.carrier(), o.set);
  const Subset adh = adh_set(xi, a);
  Json doc;
  doc["set"] = lab::serialize_subset(xi.carrier(), a);
  doc["adherence"] = lab::serialize_subset(xi.carrier(), adh);
  emit(o, doc, "adh " + xi.carrier().format(a) + " = " + xi.carrier().format(adh) + "\n");
  return kOk;
}

int cmd_closure(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const Subset a = parse_atom_list(xi.carrier(), o.set);
  const Subset cl = closure(xi, a);
  Json doc;
  doc["set"] = lab::serialize_subset(xi.carrier(), a);
  doc["closure"] = lab::serialize_subset(xi.carrier(), cl);
  doc["closed"] = cl == a;
  emit(o, doc, "cl " + xi.carrier().format(a) + " = " + xi.carrier().format(cl) + "\n");
  return kOk;
}

int cmd_paving(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const auto x = xi.carrier().index_of(o.point);
  if (!x) throw InputError("unknown atom '" + o.point + "'");
  const PavingReport p = paving(xi, *x);
  Json doc;
  doc["point"] = o.point;
  doc["paving_number"] = p.paving_number;
  Json pav = Json::array();
  std::ostringstream t;
  t << "paving number at " << o.point << ": " << p.paving_number << "\n";
  for (auto k : p.witness_pavement) {
    pav.push_back(lab::serialize_subset(xi.carrier(), k));
    t << "  " << xi.carrier().format(k) << "\n";
  }
  doc["pavement"] = std::move(pav);
  emit(o, doc, t.str());
  return kOk;
}

int cmd_classify(const Options& o, const Bounds& b) {
  const SpaceMap m = lab::parse_map_text(lab::read_file(o.file), b);
  const MapClassification c = classify(m);
  Json doc;
  doc["continuous"] = c.continuous;
  doc["open"] = c.open ? Json(*c.open) : Json(nullptr);
  doc["almost_open"] = c.almost_open;
  doc["biquotient"] = c.biquotient;
  doc["countably_biquotient"] = c.countably_biquotient;
  doc["hereditarily_quotient"] = c.hereditarily_quotient;
  doc["quotient"] = c.quotient;
  doc["perfect"] = c.perfect;
  doc["countably_perfect"] = c.countably_perfect;
  doc["adherent"] = c.adherent;
  doc["closed"] = c.closed;
  Json w = Json::object();
  for (const auto& [k, v] : c.witnesses) w[k] = v;
  doc["witnesses"] = std::move(w);
  doc["implication_failures"] = c.implication_failures;
  std::ostringstream t;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.value().is_boolean()) t << it.key() << ": " << (it.value().get<bool>() ? "yes" : "no") << "\n";
  }
  for (const auto& [k, v] : c.witnesses) t << "witness " << k << ": " << v << "\n";
  for (const auto& f : c.implication_failures) t << "IMPLICATION FAILURE: " << f << "\n";
  emit(o, doc, t.str());
  return c.implication_failures.empty() ? kOk : kRefuted;
}

int cmd_dual(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const Convergence sigma = dualizer(o.dualizer, b, true);
  const DualConvergence d = dual(xi, sigma, b);
  Json doc;
  doc["functions"] = d.space.carrier().names();
  doc["dual"] = lab::serialize_space(d.table);
  std::ostringstream t;
  t << d.space.size() << " continuous maps\n" << table_text(d.table);
  emit(o, doc, t.str());
  return kOk;
}

int cmd_epi(const Options& o, const Bounds& b) {
  const Convergence xi = load_space(o.file, b);
  const Convergence sigma = dualizer(o.dualizer, b, false);
  const EpiResult e = bidual_and_epi(xi, sigma, b);
  Json doc;
  doc["first_dual_size"] = e.first_dual.size();
  doc["bidual_materialized"] = e.bidual.has_value();
  doc["j_injective"] = e.j_injective;
  doc["j_continuous"] = e.j_continuous;
  doc["epi"] = lab::serialize_space(e.epi);
  std::ostringstream t;
  t << "|C(xi,sigma)| = " << e.first_dual.size() << ", j injective: " << (e.j_injective ? "yes" : "no")
    << ", j continuous: " << (e.j_continuous ? "yes" : "no") << "\n"
    << table_text(e.epi);
  emit(o, doc, t.str());
  return kOk;
}

int cmd_enumerate(const Options& o, const Bounds&) {
  const auto c = lab::space_class_from_string(o.cls);
  if (!c) throw InputError("unknown class '" + o.cls + "'");
  Json doc;
  doc["class"] = o.cls;
  doc["size"] = o.size;
  std::size_t n = 0;
  Json spaces = Json::array();
  std::ostringstream t;
  lab::for_each_space(o.size, *c, [&](const Convergence& xi) {
    ++n;
    if (o.count_only) return;
    spaces.push_back(lab::serialize_space(xi));
    t << "# " << n << "\n" << table_text(xi);
  });
  doc["count"] = n;
  if (!o.count_only) doc["spaces"] = std::move(spaces);
  t << "count: " << n << "\n";
  emit(o, doc, t.str());
  return kOk;
}

lab::ClaimContext context(const Options& o, const Bounds& b, bool with_size) {
  lab::ClaimContext ctx;
  ctx.bounds = b;
  if (with_size && o.size > 0) ctx.size = o.size;
  ctx.seed = o.seed;
  ctx.samples = o.samples;
  ctx.workers = lab::default_workers();
  return ctx;
}

int cmd_search(const Options& o, const Bounds& b) {
  const lab::Claim& claim = lab::find_claim(o.claim);
  if (!o.replay.empty()) {
    Json w;
    try {
      w = Json::parse(lab::read_file(o.replay));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed witness: ") + e.what());
    }
    const lab::Check c = lab::replay(claim, w, b);
    const char* outcome = c.outcome == lab::Outcome::holds ? "holds"
                          : c.outcome == lab::Outcome::fails ? "fails" : "degenerate";
    Json doc;
    doc["claim"] = claim.id;
    doc["outcome"] = outcome;
    doc["note"] = c.note;
    emit(o, doc, claim.id + ": " + outcome + (c.note.empty() ? "" : " (" + c.note + ")") + "\n");
    const bool refutes = claim.kind == lab::ClaimKind::universal && c.outcome == lab::Outcome::fails;
    return refutes && claim.must_hold ? kRefuted : kOk;
  }
  const lab::ClaimReport r = lab::run_claim(claim, context(o, b, true));
  emit(o, r.to_json(), lab::claim_text(r));
  return r.blocks_suite() ? kRefuted : kOk;
}

int cmd_suite(const Options& o, const Bounds& b) {
  const lab::SuiteReport r = lab::run_suite(o.suite, context(o, b, false));
  emit(o, r.to_json(), r.to_text());
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite convergence-space laboratory"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* validate = app.add_subcommand("validate", "Parse and check a space document");
  validate->add_option("file", o.file)->required();
  auto* reflect_cmd = app.add_subcommand("reflect", "Apply a reflector or hull");
  reflect_cmd->add_option("file", o.file)->required();
  reflect_cmd->add_option("--functor", o.functor, "T, S0, S, I, A_F0, A_F1, A_F, EpiSier or EpiBour");
  auto* adh = app.add_subcommand("adh", "Adherence of a set");
  adh->add_option("file", o.file)->required();
  adh->add_option("--set", o.set, "Comma-separated atoms")->required();
  auto* clo = app.add_subcommand("closure", "Closure of a set");
  clo->add_option("file", o.file)->required();
  clo->add_option("--set", o.set, "Comma-separated atoms")->required();
  auto* pav = app.add_subcommand("paving", "Paving number at a point");
  pav->add_option("file", o.file)->required();
  pav->add_option("--point", o.point)->required();
  auto* cls = app.add_subcommand("classify", "Quotient and perfect flags of a surjection");
  cls->add_option("file", o.file)->required();
  auto* dual_cmd = app.add_subcommand("dual", "Dual convergence [xi, sigma]");
  dual_cmd->add_option("file", o.file)->required();
  dual_cmd->add_option("--dualizer", o.dualizer, "sier, bour or a space file");
  auto* epi_cmd = app.add_subcommand("epi", "Exponential hull Epi^sigma");
  epi_cmd->add_option("file", o.file)->required();
  epi_cmd->add_option("--dualizer", o.dualizer, "sier or bour");
  auto* en = app.add_subcommand("enumerate", "Enumerate a class of spaces");
  en->add_option("--size", o.size)->required();
  en->add_option("--class", o.cls, "convergence, pretopology or topology");
  en->add_flag("--count-only", o.count_only);
  auto* search = app.add_subcommand("search", "Run one registered claim");
  search->add_option("--claim", o.claim)->required();
  search->add_option("--size", o.size, "Largest carrier size");
  search->add_option("--seed", o.seed);
  search->add_option("--samples", o.samples);
  search->add_option("--replay", o.replay, "Re-evaluate a witness file instead of searching");
  auto* suite = app.add_subcommand("suite", "Run a claim suite");
  suite->add_option("name", o.suite)->required();
  suite->add_option("--seed", o.seed);
  suite->add_option("--samples", o.samples);
  for (auto* s : {validate, reflect_cmd, adh, clo, pav, cls, dual_cmd, epi_cmd, en, search, suite}) add_format(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Bounds b = bounds_from_env();
    if (*validate) return cmd_validate(o, b);
    if (*reflect_cmd) return cmd_reflect(o, b);
    if (*adh) return cmd_adh(o, b);
    if (*clo) return cmd_closure(o, b);
    if (*pav) return cmd_paving(o, b);
    if (*cls) return cmd_classify(o, b);
    if (*dual_cmd) return cmd_dual(o, b);
    if (*epi_cmd) return cmd_epi(o, b);
    if (*en) return cmd_enumerate(o, b);
    if (*search) return cmd_search(o, b);
    if (*suite) return cmd_suite(o, b);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kRefuted;
  }
  return kInputError;
}
