#include <gtest/gtest.h>

#include <algorithm>

#include "convlab/duality.hpp"
#include "convlab/fixtures.hpp"
#include "convlab/lab/enumerate.hpp"
#include "support.hpp"

using namespace convlab;

namespace {

const Carrier ab({"a", "b"});
using Fn = std::vector<std::size_t>;

// Value vectors f with f(x) ∈ lim_σ f(K) whenever x ∈ lim_ξ K.
std::vector<Fn> oracle_functions(const oracle::Table& xi, std::size_t n, const oracle::Table& sigma, std::size_t m) {
  std::vector<Fn> out;
  Fn f(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      f[i] = c % m;
      c /= m;
    }
    bool ok = true;
    for (std::uint32_t k = 1; k < xi.size() && ok; ++k) {
      std::uint32_t img = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if ((k >> y) & 1U) img |= 1U << f[y];
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (((xi[k] >> x) & 1U) && !((sigma[img] >> f[x]) & 1U)) ok = false;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

// f ∈ lim G iff for each K and x ∈ lim_ξ K, f(x) ∈ lim_σ {g(y) : y ∈ K, g ∈ G}.
oracle::Table oracle_dual(const oracle::Table& xi, std::size_t n, const oracle::Table& sigma,
                          const std::vector<Fn>& fs) {
  oracle::Table out(std::size_t{1} << fs.size(), 0);
  for (std::uint32_t g = 1; g < out.size(); ++g) {
    for (std::size_t f = 0; f < fs.size(); ++f) {
      bool ok = true;
      for (std::uint32_t k = 1; k < xi.size() && ok; ++k) {
        std::uint32_t ev = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (!((g >> i) & 1U)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if ((k >> y) & 1U) ev |= 1U << fs[i][y];
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (((xi[k] >> x) & 1U) && !((sigma[ev] >> fs[f][x]) & 1U)) ok = false;
        }
      }
      if (ok) out[g] |= 1U << f;
    }
  }
  return out;
}

std::vector<std::pair<Convergence, Convergence>> two_point_pairs() {
  std::vector<std::pair<Convergence, Convergence>> out;
  const auto all = support::oracle_corpus(2);
  for (const auto& x : all) {
    for (const auto& y : all) out.emplace_back(x, y);
  }
  return out;
}

std::vector<Convergence> small_dualizers() {
  return {fixtures::sierpinski(), fixtures::bourdaud(), fixtures::disc2(), fixtures::chaos2()};
}

}  // namespace

TEST(FunctionSpace, Examples) {
  const auto sier = fixtures::sierpinski();
  EXPECT_EQ(function_space(fixtures::disc2(), sier).size(), 4u);
  const auto ss = function_space(sier, sier);
  EXPECT_EQ(ss.functions, (std::vector<Fn>{{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_FALSE(ss.index_of({1, 0}).has_value());
  EXPECT_EQ(ss.carrier().names(), (std::vector<std::string>{"<0,0>", "<0,1>", "<1,1>"}));
  EXPECT_EQ(function_space(fixtures::chaos2(), fixtures::disc2()).functions, (std::vector<Fn>{{0, 0}, {1, 1}}));
}

TEST(FunctionSpace, MatchesOracleOnFixturesAndTwoPointCorpus) {
  std::vector<Convergence> domains = support::oracle_corpus(2);
  for (const auto& f : fixtures::all()) domains.push_back(f.space);
  for (const auto& x : domains) {
    for (const auto& s : small_dualizers()) {
      Bounds b;
      const auto fs = function_space(x, s, b, 64);
      auto expect = oracle_functions(oracle::raw(x), x.size(), oracle::raw(s), s.size());
      EXPECT_EQ(fs.functions, expect);
    }
  }
}

TEST(FunctionSpace, Bounds) {
  Bounds b;
  b.max_function_candidates = 8;
  EXPECT_THROW(function_space(fixtures::disc3(), fixtures::bourdaud(), b), BoundExceeded);
  b = Bounds{};
  b.max_functions = 3;
  EXPECT_THROW(function_space(fixtures::disc2(), fixtures::sierpinski(), b), BoundExceeded);
  EXPECT_THROW(dual(fixtures::disc3(), fixtures::bourdaud()), BoundExceeded);
}

TEST(Dual, DiscreteIntoSierpinski) {
  const auto d = dual(fixtures::disc2(), fixtures::sierpinski());
  const auto& c = d.table.carrier();
  ASSERT_EQ(d.space.size(), 4u);
  EXPECT_EQ(d.table.lim(c.full()), Subset::atom(*d.space.index_of({0, 0})));
}

TEST(Dual, SierpinskiIntoSierpinskiRegression) {
  const auto d = dual(fixtures::sierpinski(), fixtures::sierpinski());
  // Functions <0,0>, <0,1>, <1,1> are atoms 0, 1, 2.
  const std::vector<Subset::Bits> expect{0, 0b001, 0b011, 0b001, 0b111, 0b001, 0b011, 0b001};
  for (Subset::Bits g = 1; g < 8; ++g) EXPECT_EQ(d.table.lim(Subset(g)).bits(), expect[g]) << g;
}

TEST(Dual, MatchesOracleAndContainsSingletons) {
  std::vector<Convergence> domains = support::oracle_corpus(2);
  for (const auto& f : fixtures::all()) domains.push_back(f.space);
  for (const auto& x : domains) {
    for (const auto& s : small_dualizers()) {
      const auto fs = function_space(x, s, Bounds{}, 64);
      if (fs.size() > 12) continue;
      const auto d = dual(fs);
      EXPECT_EQ(oracle::raw(d.table), oracle_dual(oracle::raw(x), x.size(), oracle::raw(s), fs.functions));
      for (std::size_t f = 0; f < fs.size(); ++f) EXPECT_TRUE(d.table.lim(Subset::atom(f)).contains(f));
    }
  }
}

TEST(Dual, InequalityMatchesMaterializedProduct) {
  for (const auto& [x, s] : two_point_pairs()) {
    const auto fs = function_space(x, s);
    if (x.size() * fs.size() > 9) continue;
    const auto d = dual(fs);
    EXPECT_TRUE(duality_inequality_holds(fs, d.table));
    EXPECT_TRUE(duality_inequality_streaming(fs));
    const Carrier pc = product_carrier(x.carrier(), d.table.carrier());
    const auto ev = initial(evaluation_map(fs, pc), s);
    EXPECT_TRUE(is_finer(product(x, d.table), ev));
    if (fs.size() > 3) continue;
    for (const auto& theta : lab::enumerate(fs.size(), lab::SpaceClass::convergence)) {
      const auto th = oracle::to_convergence(d.table.carrier(), oracle::raw(theta));
      const bool materialized = is_finer(product(x, th), ev);
      EXPECT_EQ(duality_inequality_holds(fs, th), materialized);
      // The inequality is monotone in θ, so it holds exactly for θ finer than the dual.
      EXPECT_EQ(materialized, is_finer(th, d.table));
    }
  }
}

TEST(Dual, InequalityOnFixturePairs) {
  for (const auto& x : fixtures::all()) {
    for (const auto& s : fixtures::all()) {
      Bounds b;
      const auto fs = function_space(x.space, s.space, b, b.max_epi_functions);
      if (fs.size() > 16) continue;
      if (fs.size() <= b.max_functions) {
        EXPECT_TRUE(duality_inequality_holds(fs, dual(fs).table)) << x.name << " " << s.name;
      }
      if (fs.size() <= 10) {
        EXPECT_TRUE(duality_inequality_streaming(fs)) << x.name << " " << s.name;
      }
    }
  }
}

TEST(Hyperspace, FibersAndCounts) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = Carrier::lettered(n);
    for (const auto& closed : oracle::topologies_as_closed_sets(n)) {
      const auto open = oracle::complements(closed, n);
      const auto tau = oracle::to_convergence(c, oracle::topology_table(n, open));
      std::vector<Subset> o, cl;
      for (auto u : open) o.emplace_back(u);
      for (auto f : closed) cl.emplace_back(f);
      EXPECT_EQ(hyperspace_fibers(tau, 1), o);
      EXPECT_EQ(hyperspace_fibers(tau, 0), cl);
      const auto h = hyperspace_orientation(tau);
      EXPECT_EQ(h.functions, open.size());
      EXPECT_EQ(h.open_sets, open.size());
      EXPECT_TRUE(h.value1_fibers_are_open);
    }
  }
}

TEST(Epi, Examples) {
  const auto sier = fixtures::sierpinski();
  EXPECT_EQ(epi(sier, sier), sier);
  const auto np3 = fixtures::np3();
  EXPECT_EQ(epi(np3, fixtures::bourdaud()), reflect(np3, FunctorTag::S0));
  const auto chaos = bidual_and_epi(fixtures::chaos2(), sier);
  EXPECT_FALSE(chaos.j_injective);
  EXPECT_TRUE(chaos.j_continuous);
  EXPECT_EQ(chaos.epi, fixtures::chaos2());
  const auto s = bidual_and_epi(sier, sier);
  ASSERT_TRUE(s.bidual.has_value());
  EXPECT_TRUE(s.j_injective);
  EXPECT_EQ(s.j_indices.size(), 2u);
}

TEST(Epi, HullsOnTwoPointCorpus) {
  const auto& tops = oracle::topologies_as_closed_sets(2);
  std::vector<oracle::Table> top_tables;
  for (const auto& closed : tops) top_tables.push_back(oracle::topology_table(2, oracle::complements(closed, 2)));
  std::vector<oracle::Table> pre_tables;
  for (const auto& t : oracle::all_convergence_tables(2)) {
    if (oracle::is_pretopology_table(2, t)) pre_tables.push_back(t);
  }
  for (const auto& xi : support::oracle_corpus(2)) {
    const auto es = bidual_and_epi(xi, fixtures::sierpinski());
    EXPECT_EQ(oracle::raw(es.epi), *oracle::finest_coarser(oracle::raw(xi), top_tables));
    EXPECT_TRUE(es.j_continuous);
    const auto eb = bidual_and_epi(xi, fixtures::bourdaud());
    EXPECT_EQ(oracle::raw(eb.epi), *oracle::finest_coarser(oracle::raw(xi), pre_tables));
  }
  EXPECT_EQ(epi(fixtures::pt3(), fixtures::bourdaud()), fixtures::pt3());
}

TEST(Epi, FunctorsAndBounds) {
  const auto f = any_functor(FunctorTag::EpiBour);
  EXPECT_EQ(f(fixtures::np3()), reflect(fixtures::np3(), FunctorTag::S0));
  EXPECT_EQ(any_functor(FunctorTag::T)(fixtures::pt3()), reflect(fixtures::pt3(), FunctorTag::T));
  EXPECT_THROW(epi_functor(FunctorTag::T), InputError);
  EXPECT_THROW(epi(fixtures::disc3(), fixtures::disc3(), [] {
    Bounds b;
    b.max_epi_functions = 20;
    return b;
  }()), BoundExceeded);
}

TEST(Exponentiality, TwoPointPairs) {
  const auto pairs = two_point_pairs();
  const auto s = exponentiality_check(functor(FunctorTag::S), pairs);
  EXPECT_TRUE(s.asserted);
  EXPECT_EQ(s.failures(), 0u);
  EXPECT_EQ(s.results.size(), 81u);
  const auto i = exponentiality_check(functor(FunctorTag::I), pairs);
  EXPECT_EQ(i.failures(), 0u);
  const auto t = exponentiality_check(functor(FunctorTag::T), pairs);
  EXPECT_FALSE(t.asserted);
  EXPECT_TRUE(t.ok());
}
