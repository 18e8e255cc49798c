#include "convlab/lab/enumerate.hpp"

#include <cstdint>

namespace convlab::lab {

const char* to_string(SpaceClass c) {
  switch (c) {
    case SpaceClass::convergence: return "convergence";
    case SpaceClass::pretopology: return "pretopology";
    case SpaceClass::topology: return "topology";
  }
  return "unknown";
}

std::optional<SpaceClass> space_class_from_string(const std::string& s) {
  if (s == "convergence") return SpaceClass::convergence;
  if (s == "pretopology") return SpaceClass::pretopology;
  if (s == "topology") return SpaceClass::topology;
  return std::nullopt;
}

std::size_t enumeration_limit(SpaceClass c) { return c == SpaceClass::convergence ? 3 : 4; }

namespace {

// Families of nonempty kernels (bit k−1 stands for kernel k) that are
// closed under nonempty subsets and contain {x}.
std::vector<std::uint32_t> converging_families(std::size_t n, std::size_t x) {
  const std::size_t kernels = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << kernels); ++fam) {
    if (!((fam >> (Subset::atom(x).bits() - 1)) & 1U)) continue;
    bool down = true;
    for (std::size_t k = 1; down && k <= kernels; ++k) {
      if (!((fam >> (k - 1)) & 1U)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t smaller = k & ~(std::size_t{1} << i);
        if (smaller != k && smaller != 0 && !((fam >> (smaller - 1)) & 1U)) {
          down = false;
          break;
        }
      }
    }
    if (down) out.push_back(fam);
  }
  return out;
}

template <class Digits, class Emit>
void mixed_radix(const std::vector<Digits>& choices, Emit&& emit) {
  const std::size_t n = choices.size();
  std::vector<std::size_t> d(n, 0);
  while (true) {
    emit(d);
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++d[pos] < choices[pos].size()) {
        done = false;
        break;
      }
      d[pos] = 0;
    }
    if (done) return;
  }
}

}  // namespace

void for_each_space(std::size_t n, SpaceClass c, const std::function<void(const Convergence&)>& visit) {
  if (n == 0) throw InputError("carrier size must be positive");
  if (n > enumeration_limit(c)) {
    throw BoundExceeded(std::string("exhaustive ") + to_string(c) + " enumeration is limited to " +
                        std::to_string(enumeration_limit(c)) + " atoms");
  }
  const Carrier carrier = Carrier::lettered(n);
  const std::size_t rows = carrier.powerset_size();

  if (c == SpaceClass::convergence) {
    std::vector<std::vector<std::uint32_t>> choices;
    for (std::size_t x = 0; x < n; ++x) choices.push_back(converging_families(n, x));
    mixed_radix(choices, [&](const std::vector<std::size_t>& d) {
      std::vector<Subset> table(rows);
      for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t fam = choices[x][d[x]];
        for (std::size_t k = 1; k < rows; ++k) {
          if ((fam >> (k - 1)) & 1U) table[k] |= Subset::atom(x);
        }
      }
      visit(Convergence(carrier, std::move(table)));
    });
    return;
  }

  std::vector<std::vector<Subset>> choices(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (Subset::Bits v = 1; v < rows; ++v) {
      if (Subset(v).contains(x)) choices[x].emplace_back(v);
    }
  }
  mixed_radix(choices, [&](const std::vector<std::size_t>& d) {
    std::vector<Subset> vic(n);
    for (std::size_t x = 0; x < n; ++x) vic[x] = choices[x][d[x]];
    if (c == SpaceClass::topology) {
      for (std::size_t x = 0; x < n; ++x) {
        bool transitive = true;
        vic[x].for_each([&](std::size_t y) { transitive = transitive && vic[y].is_subset_of(vic[x]); });
        if (!transitive) return;
      }
    }
    visit(Convergence::from_vicinities(carrier, vic));
  });
}

std::vector<Convergence> enumerate(std::size_t n, SpaceClass c) {
  std::vector<Convergence> out;
  for_each_space(n, c, [&](const Convergence& xi) { out.push_back(xi); });
  return out;
}

std::size_t count(std::size_t n, SpaceClass c) {
  std::size_t k = 0;
  for_each_space(n, c, [&](const Convergence&) { ++k; });
  return k;
}

}  // namespace convlab::lab
