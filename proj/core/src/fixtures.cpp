#include "convlab/fixtures.hpp"

namespace convlab::fixtures {
namespace {

Carrier ab() {
  static const Carrier c({"a", "b"});
  return c;
}

Carrier abc() {
  static const Carrier c({"a", "b", "c"});
  return c;
}

Carrier abcd() {
  static const Carrier c({"a", "b", "c", "d"});
  return c;
}

Carrier bits01() {
  static const Carrier c({"0", "1"});
  return c;
}

Carrier bits012() {
  static const Carrier c({"0", "1", "2"});
  return c;
}

Convergence from_singletons(const Carrier& c, const std::vector<Subset>& singleton_limits) {
  std::vector<Subset> t(c.powerset_size());
  for (Subset::Bits k = 1; k < t.size(); ++k) {
    Subset lim = c.full();
    Subset(k).for_each([&](std::size_t x) { lim &= singleton_limits[x]; });
    t[k] = lim;
  }
  return Convergence(c, std::move(t));
}

}  // namespace

Convergence disc2() { return Convergence::discrete(ab()); }

Convergence chaos2() { return Convergence::chaotic(ab()); }

Convergence disc3() { return Convergence::discrete(abc()); }

Convergence sierpinski() {
  // Open sets ∅, {1}, {0,1}: N(0) has kernel {0,1}, N(1) has kernel {1}.
  return Convergence::from_vicinities(bits01(), {Subset(0b11), Subset(0b10)});
}

Convergence bourdaud() {
  return from_singletons(bits012(), {Subset(0b011), Subset(0b111), Subset(0b111)});
}

Convergence np3() {
  std::vector<Subset> t(8);
  t[0b001] = Subset(0b001);
  t[0b010] = Subset(0b011);
  t[0b100] = Subset(0b101);
  return Convergence(abc(), std::move(t));
}

Convergence pt3() {
  return Convergence::from_vicinities(abc(), {Subset(0b011), Subset(0b110), Subset(0b100)});
}

// Two open points a, b with c adherent to a and d adherent to b.
Convergence two_spikes() {
  return Convergence::from_vicinities(abcd(), {Subset(0b0001), Subset(0b0010), Subset(0b0101), Subset(0b1010)});
}

SpaceMap quotient_not_hereditarily_quotient() {
  const Convergence tau = Convergence::from_vicinities(abc(), {Subset(0b001), Subset(0b011), Subset(0b111)});
  return SpaceMap(two_spikes(), tau, std::vector<std::size_t>{0, 1, 1, 2});
}

SpaceMap hereditarily_quotient_not_almost_open() {
  const Convergence tau = Convergence::from_vicinities(abc(), {Subset(0b001), Subset(0b010), Subset(0b111)});
  return SpaceMap(two_spikes(), tau, std::vector<std::size_t>{0, 1, 2, 2});
}

std::vector<NamedFixture> all() {
  return {{"DISC2", disc2()}, {"CHAOS2", chaos2()}, {"DISC3", disc3()}, {"SIER", sierpinski()},
          {"BOUR", bourdaud()}, {"NP3", np3()},      {"PT3", pt3()}};
}

}  // namespace convlab::fixtures
