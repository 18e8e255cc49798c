#pragma once

#include <string>
#include <vector>

#include "convlab/convergence.hpp"

namespace convlab::fixtures {

/// Discrete topology on {a,b}.
Convergence disc2();
/// Chaotic topology on {a,b}.
Convergence chaos2();
/// Discrete topology on {a,b,c}.
Convergence disc3();
/// Sierpiński topology on {0,1}; closed sets ∅, {0}, {0,1}.
Convergence sierpinski();
/// Bourdaud pretopology on {0,1,2}: lim{0}↑={0,1}, lim{1}↑=lim{2}↑={0,1,2},
/// larger kernels completed pretopologically.
Convergence bourdaud();
/// {a,b,c}: lim{a}↑={a}, lim{b}↑={a,b}, lim{c}↑={a,c}, ∅ on larger kernels.
/// Finitely deep fails and it is not a pseudotopology.
Convergence np3();
/// Pretopology on {a,b,c} with vicinity kernels {a,b}, {b,c}, {c}; its
/// adherence is not idempotent.
Convergence pt3();

struct NamedFixture {
  std::string name;
  Convergence space;
};

/// All fixtures above, in a fixed order.
std::vector<NamedFixture> all();

/// Continuous surjections between finite topologies, 4 points onto 3,
/// found by exhaustive search (none exist among topologies on ≤ 3 points).
/// Quotient but not hereditarily quotient:
SpaceMap quotient_not_hereditarily_quotient();
/// Hereditarily quotient but not almost open:
SpaceMap hereditarily_quotient_not_almost_open();

}  // namespace convlab::fixtures
