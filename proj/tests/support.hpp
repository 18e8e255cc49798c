#pragma once

#include <string>
#include <vector>

#include "convlab/convergence.hpp"
#include "oracles.hpp"

namespace support {

inline convlab::Subset set(const convlab::Carrier& c, const std::string& atoms) {
  std::vector<std::string> names;
  for (char ch : atoms) names.emplace_back(1, ch);
  return c.subset(names);
}

// Every convergence on the lettered carrier of size n, from the brute-force oracle.
inline std::vector<convlab::Convergence> oracle_corpus(std::size_t n) {
  const auto c = convlab::Carrier::lettered(n);
  std::vector<convlab::Convergence> out;
  for (const auto& t : oracle::all_convergence_tables(n)) out.push_back(oracle::to_convergence(c, t));
  return out;
}

// Every topology on the lettered carrier of size n, from closure systems.
inline std::vector<convlab::Convergence> oracle_topologies(std::size_t n) {
  const auto c = convlab::Carrier::lettered(n);
  std::vector<convlab::Convergence> out;
  for (const auto& closed : oracle::topologies_as_closed_sets(n)) {
    out.push_back(oracle::to_convergence(c, oracle::topology_table(n, oracle::complements(closed, n))));
  }
  return out;
}

}  // namespace support
