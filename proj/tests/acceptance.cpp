// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "convlab/compactness.hpp"
#include "convlab/duality.hpp"
#include "convlab/fixtures.hpp"
#include "convlab/lab/claims.hpp"
#include "convlab/lab/document.hpp"
#include "convlab/lab/enumerate.hpp"
#include "convlab/lab/suite.hpp"
#include "convlab/maps.hpp"
#include "support.hpp"

using namespace convlab;

namespace {

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << what << ": " << detail << std::endl;
  if (!ok) ++failures;
}

std::vector<AtomMap> surjections(const Carrier& x, const Carrier& y) {
  std::vector<AtomMap> out;
  for (auto& f : all_maps(x, y)) {
    if (f.is_surjective()) out.push_back(f);
  }
  return out;
}

std::uint32_t oracle_adh(const oracle::Table& t, std::uint32_t a) {
  std::uint32_t out = 0;
  for (std::uint32_t k = 1; k < t.size(); ++k) {
    if (k & a) out |= t[k];
  }
  return out;
}

bool oracle_cover(const oracle::Table& t, std::uint32_t fam, std::uint32_t a) {
  for (std::uint32_t k = 1; k < t.size(); ++k) {
    if (!(t[k] & a)) continue;
    bool inside = false;
    for (std::uint32_t s = 0; s < t.size(); ++s) inside = inside || (((fam >> s) & 1U) && oracle::subset(k, s));
    if (!inside) return false;
  }
  return true;
}

std::vector<Convergence> corpus2() { return support::oracle_corpus(2); }

void criterion1() {
  const std::size_t conv2 = lab::count(2, lab::SpaceClass::convergence);
  const std::size_t top2 = lab::count(2, lab::SpaceClass::topology);
  const std::size_t pre3 = lab::count(3, lab::SpaceClass::pretopology);
  std::set<oracle::Table> oracle_top3;
  for (const auto& closed : oracle::topologies_as_closed_sets(3)) {
    oracle_top3.insert(oracle::topology_table(3, oracle::complements(closed, 3)));
  }
  std::set<oracle::Table> top3;
  for (const auto& t : lab::enumerate(3, lab::SpaceClass::topology)) top3.insert(oracle::raw(t));
  std::size_t oracle_pre3 = 0;
  for (const auto& t : oracle::all_convergence_tables(3)) oracle_pre3 += oracle::is_pretopology_table(3, t);
  const bool ok = conv2 == 9 && oracle::all_convergence_tables(2).size() == 9 && top2 == 4 && pre3 == 64 &&
                  oracle_pre3 == 64 && top3 == oracle_top3;
  std::ostringstream d;
  d << "convergences(2)=" << conv2 << " topologies(2)=" << top2 << " pretopologies(3)=" << pre3
    << " topologies(3)=" << top3.size() << " closure systems(3)=" << oracle_top3.size()
    << (top3 == oracle_top3 ? " (same set)" : " (sets differ)");
  line(1, ok, "enumeration counts", d.str());
}

void criterion2() {
  std::size_t checked = 0, bad_a = 0, bad_b = 0, pretopologies = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    std::set<oracle::Table> tops;
    for (const auto& closed : oracle::topologies_as_closed_sets(n)) {
      tops.insert(oracle::topology_table(n, oracle::complements(closed, n)));
    }
    for (const auto& xi : lab::enumerate(n, lab::SpaceClass::convergence)) {
      ++checked;
      bool paving_one = true;
      for (std::size_t x = 0; x < n; ++x) paving_one = paving_one && oracle::min_pavement(n, oracle::raw(xi), x) == 1;
      const bool pre = is_pretopology(xi);
      if (pre != paving_one || pre != oracle::is_pretopology_table(n, oracle::raw(xi))) ++bad_a;
      if (!pre) continue;
      ++pretopologies;
      const bool top = is_topology(xi);
      if (top != is_adherence_idempotent(xi) || top != (tops.count(oracle::raw(xi)) == 1)) ++bad_b;
    }
  }
  std::ostringstream d;
  d << checked << " convergences (exhaustive on 2 and 3 atoms), " << pretopologies
    << " pretopologies; counterexamples (a)=" << bad_a << " (b)=" << bad_b;
  line(2, bad_a == 0 && bad_b == 0, "pretopology and topology characterizations", d.str());
}

void criterion3() {
  std::vector<Convergence> spaces = corpus2();
  for (const auto& f : fixtures::all()) {
    if (f.space.size() == 3) spaces.push_back(f.space);
  }
  for (const auto& xi : lab::enumerate(3, lab::SpaceClass::convergence)) spaces.push_back(xi);
  std::size_t bad = 0, pseudo = 0, pseudo_not_pre = 0;
  for (const auto& xi : spaces) {
    if (oracle::raw(reflect(xi, FunctorTag::S0)) != oracle::raw(reflect(xi, FunctorTag::S))) ++bad;
    if (oracle::is_pseudotopology_table(xi.size(), oracle::raw(xi))) {
      ++pseudo;
      if (!is_pretopology(xi)) ++pseudo_not_pre;
    }
  }
  std::ostringstream d;
  d << spaces.size() << " spaces (2-atom corpus, 3-atom fixtures, all 3-atom convergences); S0/S differences="
    << bad << "; pseudotopologies=" << pseudo << " of which not pretopologies=" << pseudo_not_pre;
  line(3, bad == 0 && pseudo_not_pre == 0, "finite collapse", d.str());
}

void criterion4() {
  const auto c2 = corpus2();
  const auto c3 = lab::enumerate(3, lab::SpaceClass::convergence);
  std::size_t products = 0, bad_s = 0;
  auto s_check = [&](const Convergence& x, const Convergence& y) {
    ++products;
    const auto lhs = reflect(product(x, y), FunctorTag::S);
    const auto rhs = product(reflect(x, FunctorTag::S), reflect(y, FunctorTag::S));
    if (!(lhs == rhs)) ++bad_s;
  };
  for (const auto& x : c2) {
    for (const auto& y : c2) s_check(x, y);
    for (const auto& y : c3) s_check(x, y);
  }
  std::size_t maps = 0, bad_a = 0;
  auto a_check = [&](const AtomMap& f, const Convergence& tau) {
    for (auto tag : {FunctorTag::A_F0, FunctorTag::A_F}) {
      ++maps;
      if (!(reflect(initial(f, tau), tag) == initial(f, reflect(tau, tag)))) ++bad_a;
    }
  };
  const auto a2 = Carrier::lettered(2);
  const auto a3 = Carrier::lettered(3);
  for (const auto& tau : c2) {
    for (const auto& f : all_maps(a2, a2)) a_check(f, tau);
    for (const auto& f : all_maps(a3, a2)) a_check(f, tau);
  }
  for (const auto& tau : c3) {
    for (const auto& f : all_maps(a2, a3)) a_check(f, tau);
  }
  std::ostringstream d;
  d << products << " products (2x2 and 2x3, exhaustive) with " << bad_s << " S failures; " << maps
    << " initial checks for H in {F0, F} with " << bad_a << " failures";
  line(4, bad_s == 0 && bad_a == 0, "commutation", d.str());
}

void criterion5() {
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto c = Carrier::lettered(n);
    for (const auto& xi : lab::enumerate(n, lab::SpaceClass::convergence)) {
      const auto t = oracle::raw(xi);
      for (Subset::Bits a = 0; a < c.powerset_size(); ++a) {
        ++checked;
        const Subset by_vicinity = adh_set(xi, Subset(a));
        const Subset by_mesh = adh_family(xi, SubsetFamily(c, {Subset(a)}));
        if (by_vicinity != by_mesh || by_vicinity.bits() != oracle_adh(t, a)) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << checked << " (space, set) pairs, exhaustive on 2 and 3 atoms; discrepancies=" << bad;
  line(5, bad == 0, "adherence consistency", d.str());
}

void criterion6() {
  const auto c = Carrier::lettered(2);
  std::size_t checked = 0, bad = 0;
  for (const auto& xi : corpus2()) {
    const auto t = oracle::raw(xi);
    for (std::uint32_t fam = 0; fam < 16; ++fam) {
      std::vector<Subset> sets;
      for (std::uint32_t s = 0; s < 4; ++s) {
        if ((fam >> s) & 1U) sets.emplace_back(s);
      }
      const SubsetFamily p(c, sets);
      for (std::uint32_t a = 0; a < 4; ++a) {
        ++checked;
        const auto r = check_cover(xi, p, Subset(a));
        if (!r.consistent() || r.definition != oracle_cover(t, fam, a)) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << checked << " (space, family, set) triples on 2 atoms; discrepancies=" << bad;
  line(6, bad == 0, "cover criterion", d.str());
}

void criterion7() {
  std::size_t pairs = 0, bad = 0;
  const auto c2 = corpus2();
  for (const auto& x : c2) {
    for (const auto& y : c2) {
      ++pairs;
      const auto cx = characteristic(x).table;
      const auto cy = characteristic(y).table;
      const bool chi = characteristic(product(x, y)).table == product(cx, cy);
      const bool s = reflect(product(cx, cy), FunctorTag::S) ==
                     product(reflect(cx, FunctorTag::S), reflect(cy, FunctorTag::S));
      const auto r = tikhonov_check(x, y);
      if (!chi || !s || !r.holds() || r.characteristic_of_product != chi || r.s_commutes != s) ++bad;
    }
  }
  std::ostringstream d;
  d << pairs << " pairs on 2 atoms; failures=" << bad;
  line(7, bad == 0 && pairs == 81, "characteristic products", d.str());
}

oracle::TopMap top_map(const SpaceMap& m) {
  return {m.domain().size(), m.codomain().size(), m.map().assignment(),
          oracle::open_sets(m.domain().size(), oracle::raw(m.domain())),
          oracle::open_sets(m.codomain().size(), oracle::raw(m.codomain()))};
}

void criterion8() {
  const auto c2 = corpus2();
  const auto a2 = Carrier::lettered(2);
  std::vector<SpaceMap> corpus;
  for (const auto& x : c2) {
    for (const auto& y : c2) {
      for (const auto& f : surjections(a2, a2)) corpus.emplace_back(x, y, f);
    }
  }
  std::size_t chain_bad = 0, expanded_bad = 0;
  for (const auto& m : corpus) {
    const auto c = classify(m);
    if (!c.implication_failures.empty()) ++chain_bad;
    if (c.almost_open && !c.biquotient) ++chain_bad;
    if (c.biquotient && !c.hereditarily_quotient) ++chain_bad;
    if (c.hereditarily_quotient && !c.quotient) ++chain_bad;
    if (expanded_quotient(m, FilterClass::all) != is_J_quotient(m, FunctorTag::A_F)) ++expanded_bad;
    if (expanded_quotient(m, FilterClass::principal) != is_J_quotient(m, FunctorTag::A_F0)) ++expanded_bad;
  }
  const auto pq = perfect_implies_quotient_check(corpus);

  std::size_t top_maps = 0, closed_bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto xs = support::oracle_topologies(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto ys = support::oracle_topologies(k);
      const auto fs = surjections(Carrier::lettered(n), Carrier::lettered(k));
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          for (const auto& f : fs) {
            const SpaceMap m(x, y, f);
            ++top_maps;
            if (is_H_perfect(m, FilterClass::all) != top_map(m).closed_map()) ++closed_bad;
          }
        }
      }
    }
  }

  const auto q = fixtures::quotient_not_hereditarily_quotient();
  const auto h = fixtures::hereditarily_quotient_not_almost_open();
  const auto oq = top_map(q);
  const auto oh = top_map(h);
  const auto cq = classify(q);
  const auto ch = classify(h);
  const bool witnesses = oq.continuous() && oq.quotient() && !oq.pseudo_open() && cq.quotient &&
                         !cq.hereditarily_quotient && oh.continuous() && oh.pseudo_open() && !oh.almost_open() &&
                         ch.hereditarily_quotient && !ch.almost_open;

  std::ostringstream d;
  d << corpus.size() << " surjections on 2 atoms: (a) chain breaks=" << chain_bad << " (b) expanded-form mismatches="
    << expanded_bad << " (c) perfect-not-quotient=" << pq.violations.size() << " of " << pq.perfect
    << " perfect; (d) " << top_maps << " surjections between topologies on <=3 points (exhaustive), perfect/closed"
    << " mismatches=" << closed_bad << "; (e) stored 4->3 witnesses " << (witnesses ? "replay" : "DO NOT replay");
  line(8, chain_bad == 0 && expanded_bad == 0 && pq.holds() && closed_bad == 0 && witnesses, "quotient and perfect maps",
       d.str());
}

void criterion9() {
  Bounds b;
  std::size_t pairs = 0, ineq_bad = 0, streamed = 0;
  for (const auto& x : fixtures::all()) {
    for (const auto& s : fixtures::all()) {
      ++pairs;
      try {
        const auto fs = function_space(x.space, s.space, b, b.max_epi_functions);
        bool ok;
        if (fs.size() <= b.max_functions) {
          ok = duality_inequality_holds(fs, dual(fs).table);
        } else {
          ok = duality_inequality_streaming(fs, b);
          ++streamed;
        }
        if (!ok) ++ineq_bad;
      } catch (const BoundExceeded&) {
        ++ineq_bad;
      }
    }
  }

  std::vector<std::pair<Convergence, Convergence>> small;
  for (const auto& x : fixtures::all()) {
    for (const auto& s : fixtures::all()) small.emplace_back(x.space, s.space);
  }
  const auto c2 = corpus2();
  for (const auto& x : c2) {
    for (const auto& s : c2) small.emplace_back(x, s);
  }
  std::size_t coarse_pairs = 0, thetas = 0, coarse_bad = 0;
  for (const auto& [x, s] : small) {
    const auto fs = function_space(x, s, b, b.max_epi_functions);
    if (fs.size() > 3) continue;
    ++coarse_pairs;
    const auto d = dual(fs).table;
    for (const auto& theta : lab::enumerate(fs.size(), lab::SpaceClass::convergence)) {
      ++thetas;
      const auto th = oracle::to_convergence(d.carrier(), oracle::raw(theta));
      if (duality_inequality_holds(fs, th) != is_finer(th, d)) ++coarse_bad;
    }
  }

  std::vector<Convergence> epi_corpus = c2;
  epi_corpus.push_back(fixtures::np3());
  epi_corpus.push_back(fixtures::pt3());
  std::size_t epi_bad = 0;
  for (const auto& xi : epi_corpus) {
    if (!(epi(xi, fixtures::bourdaud(), b) == reflect(xi, FunctorTag::S0))) ++epi_bad;
  }

  std::size_t tops = 0, hyper_bad = 0, value1_open = 0, value1_closed = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& closed : oracle::topologies_as_closed_sets(n)) {
      const auto open = oracle::complements(closed, n);
      const auto tau = oracle::to_convergence(Carrier::lettered(n), oracle::topology_table(n, open));
      ++tops;
      const auto o = hyperspace_orientation(tau, b);
      if (o.functions != open.size()) ++hyper_bad;
      value1_open += o.value1_fibers_are_open;
      value1_closed += o.value1_fibers_are_closed;
    }
  }

  std::ostringstream d;
  d << "(a) " << pairs << " fixture pairs, " << streamed << " streamed, failures=" << ineq_bad << "; (b) " << coarse_pairs
    << " pairs with |C|<=3 against " << thetas << " thetas, mismatches=" << coarse_bad << "; (c) Epi^bour vs S0 on "
    << epi_corpus.size() << " spaces, mismatches=" << epi_bad << "; (d) " << tops
    << " topologies, count mismatches=" << hyper_bad << " [logged: value-1 fibers open in " << value1_open
    << ", closed in " << value1_closed << "]";
  line(9, ineq_bad == 0 && coarse_bad == 0 && epi_bad == 0 && hyper_bad == 0, "duality", d.str());
}

void criterion10() {
  std::size_t docs = 0, roundtrip_bad = 0;
  std::vector<Convergence> spaces = corpus2();
  for (const auto& f : fixtures::all()) spaces.push_back(f.space);
  for (const auto& xi : spaces) {
    ++docs;
    const std::string text = lab::dump(lab::serialize_space(xi));
    const auto back = lab::parse_space_text(text);
    if (!(back == xi) || lab::dump(lab::serialize_space(back)) != text) ++roundtrip_bad;
  }

  lab::ClaimContext one;
  one.workers = 1;
  lab::ClaimContext many;
  many.workers = std::max<std::size_t>(2, lab::default_workers());
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = lab::run_suite("paper-core", one);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto second = lab::run_suite("paper-core", many);
  const bool identical = lab::dump(first.to_json()) == lab::dump(second.to_json());

  const auto fault = lab::run_suite("fault-injection", one);
  bool replayable = false;
  for (const auto& c : fault.claims) {
    if (c.status == lab::ClaimStatus::refuted && !c.witnesses.empty()) {
      replayable = lab::replay(lab::find_claim(c.id), c.witnesses.front()).outcome == lab::Outcome::fails;
    }
  }

  std::ostringstream d;
  d << docs << " strict documents, round-trip differences=" << roundtrip_bad << "; paper-core "
    << (first.passed() ? "passed" : "FAILED") << " in " << static_cast<int>(secs) << "s, reports with 1 and "
    << many.workers << " workers " << (identical ? "byte-identical" : "DIFFER") << "; fault-injection exit "
    << fault.exit_code() << ", witness " << (replayable ? "replays" : "does not replay");
  line(10, roundtrip_bad == 0 && first.passed() && identical && fault.exit_code() != 0 && replayable,
       "infrastructure", d.str());
}

}  // namespace

int main() {
  const std::pair<int, void (*)()> criteria[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                                                 {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
                                                 {9, criterion9}, {10, criterion10}};
  for (const auto& [id, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      line(id, false, "error", e.what());
    }
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
