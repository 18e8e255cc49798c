#include "convlab/convergence.hpp"

#include <sstream>

namespace convlab {

const char* to_string(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::missing_row: return "missing-row";
    case AxiomViolation::Kind::duplicate_row: return "duplicate-row";
    case AxiomViolation::Kind::outside_carrier: return "outside-carrier";
    case AxiomViolation::Kind::point_axiom: return "point-axiom";
    case AxiomViolation::Kind::monotonicity: return "monotonicity";
  }
  return "unknown";
}

std::optional<AxiomViolation> check_axioms(const Carrier& carrier, const std::vector<Subset>& table) {
  const std::size_t n = carrier.size();
  const Subset full = carrier.full();
  if (table.size() != carrier.powerset_size()) {
    return AxiomViolation{AxiomViolation::Kind::missing_row, {}, {}, 0,
                          "table has " + std::to_string(table.size()) + " rows, expected " +
                              std::to_string(carrier.powerset_size())};
  }
  for (Subset::Bits k = 1; k < table.size(); ++k) {
    if (!table[k].is_subset_of(full)) {
      return AxiomViolation{AxiomViolation::Kind::outside_carrier, Subset(k), {}, 0,
                            "limit set of " + carrier.format(Subset(k)) + " leaves the carrier"};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Subset k = Subset::atom(x);
    if (!table[k.bits()].contains(x)) {
      return AxiomViolation{AxiomViolation::Kind::point_axiom, k, {}, x,
                            "point axiom fails at " + carrier.name(x)};
    }
  }
  // Immediate supersets suffice by transitivity.
  for (Subset::Bits k = 1; k < table.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      const Subset kernel(k);
      if (kernel.contains(x)) continue;
      const Subset wider = kernel | Subset::atom(x);
      if (!table[wider.bits()].is_subset_of(table[k])) {
        return AxiomViolation{AxiomViolation::Kind::monotonicity, kernel, wider, 0,
                              "lim " + carrier.format(wider) + " ⊄ lim " + carrier.format(kernel)};
      }
    }
  }
  return std::nullopt;
}

Convergence::Convergence(Carrier carrier, std::vector<Subset> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {
  if (!table_.empty()) table_[0] = Subset{};
  if (auto v = check_axioms(carrier_, table_)) {
    throw InputError(std::string("not a convergence (") + to_string(v->kind) + "): " + v->message);
  }
}

Convergence Convergence::discrete(const Carrier& c) {
  std::vector<Subset> t(c.powerset_size());
  for (std::size_t x = 0; x < c.size(); ++x) t[Subset::atom(x).bits()] = Subset::atom(x);
  return Convergence(c, std::move(t));
}

Convergence Convergence::chaotic(const Carrier& c) {
  std::vector<Subset> t(c.powerset_size(), c.full());
  return Convergence(c, std::move(t));
}

Convergence Convergence::from_vicinities(const Carrier& c, const std::vector<Subset>& vicinity) {
  if (vicinity.size() != c.size()) throw InputError("one vicinity kernel per atom required");
  std::vector<Subset> t(c.powerset_size());
  for (Subset::Bits k = 1; k < t.size(); ++k) {
    Subset lim;
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (Subset(k).is_subset_of(vicinity[x])) lim |= Subset::atom(x);
    }
    t[k] = lim;
  }
  return Convergence(c, std::move(t));
}

ValidationResult validate(const Carrier& carrier, std::span<const std::pair<Subset, Subset>> rows) {
  std::vector<Subset> table(carrier.powerset_size());
  std::vector<bool> seen(carrier.powerset_size(), false);
  const Subset full = carrier.full();
  for (const auto& [kernel, limits] : rows) {
    if (kernel.empty() || !kernel.is_subset_of(full)) {
      return AxiomViolation{AxiomViolation::Kind::outside_carrier, kernel, {}, 0,
                            "kernel is empty or outside the carrier"};
    }
    if (seen[kernel.bits()]) {
      return AxiomViolation{AxiomViolation::Kind::duplicate_row, kernel, {}, 0,
                            "duplicate row for kernel " + carrier.format(kernel)};
    }
    seen[kernel.bits()] = true;
    table[kernel.bits()] = limits;
  }
  for (Subset::Bits k = 1; k < table.size(); ++k) {
    if (!seen[k]) {
      return AxiomViolation{AxiomViolation::Kind::missing_row, Subset(k), {}, 0,
                            "missing row for kernel " + carrier.format(Subset(k))};
    }
  }
  if (auto v = check_axioms(carrier, table)) return *v;
  return Convergence(carrier, std::move(table));
}

Convergence sup(std::span<const Convergence> xs) {
  if (xs.empty()) throw InputError("sup of an empty set of convergences");
  std::vector<Subset> t = xs.front().table();
  for (const auto& x : xs.subspan(1)) {
    require_same_carrier(xs.front().carrier(), x.carrier(), "sup");
    for (std::size_t k = 1; k < t.size(); ++k) t[k] &= x.table()[k];
  }
  return Convergence(xs.front().carrier(), std::move(t));
}

Convergence inf(std::span<const Convergence> xs) {
  if (xs.empty()) throw InputError("inf of an empty set of convergences");
  std::vector<Subset> t = xs.front().table();
  for (const auto& x : xs.subspan(1)) {
    require_same_carrier(xs.front().carrier(), x.carrier(), "inf");
    for (std::size_t k = 1; k < t.size(); ++k) t[k] |= x.table()[k];
  }
  return Convergence(xs.front().carrier(), std::move(t));
}

Convergence sup(const Convergence& a, const Convergence& b) {
  const Convergence xs[] = {a, b};
  return sup(xs);
}

Convergence inf(const Convergence& a, const Convergence& b) {
  const Convergence xs[] = {a, b};
  return inf(xs);
}

bool is_finer(const Convergence& zeta, const Convergence& xi) {
  require_same_carrier(zeta.carrier(), xi.carrier(), "is_finer");
  for (std::size_t k = 1; k < zeta.table().size(); ++k) {
    if (!zeta.table()[k].is_subset_of(xi.table()[k])) return false;
  }
  return true;
}

SpaceMap::SpaceMap(Convergence domain, Convergence codomain, AtomMap f)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(f)) {
  require_same_carrier(domain_.carrier(), f_.domain(), "SpaceMap domain");
  require_same_carrier(codomain_.carrier(), f_.codomain(), "SpaceMap codomain");
}

SpaceMap::SpaceMap(Convergence domain, Convergence codomain, std::vector<std::size_t> assignment)
    : SpaceMap(domain, codomain, AtomMap(domain.carrier(), codomain.carrier(), std::move(assignment))) {}

bool is_continuous(const AtomMap& f, const Convergence& xi, const Convergence& tau) {
  require_same_carrier(f.domain(), xi.carrier(), "is_continuous domain");
  require_same_carrier(f.codomain(), tau.carrier(), "is_continuous codomain");
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    const Subset target = tau.lim(f.image(Subset(k)));
    if (!f.image(xi.table()[k]).is_subset_of(target)) return false;
  }
  return true;
}

bool is_continuous(const SpaceMap& m) { return is_continuous(m.map(), m.domain(), m.codomain()); }

Convergence initial(const AtomMap& f, const Convergence& tau) {
  require_same_carrier(f.codomain(), tau.carrier(), "initial");
  std::vector<Subset> t(f.domain().powerset_size());
  for (Subset::Bits k = 1; k < t.size(); ++k) t[k] = f.preimage(tau.lim(f.image(Subset(k))));
  return Convergence(f.domain(), std::move(t));
}

Convergence final(const AtomMap& f, const Convergence& xi) {
  require_same_carrier(f.domain(), xi.carrier(), "final");
  const Carrier& y = f.codomain();
  // Required limits at each exact image kernel, then closed downward.
  std::vector<Subset> required(y.powerset_size());
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    required[f.image(Subset(k)).bits()] |= f.image(xi.table()[k]);
  }
  std::vector<Subset> t(y.powerset_size());
  for (Subset::Bits m = 1; m < t.size(); ++m) {
    Subset lim = Subset(m).is_singleton() ? Subset(m) : Subset{};
    for (Subset::Bits w = m; w < t.size(); w = (w + 1) | m) lim |= required[w];
    t[m] = lim;
  }
  return Convergence(y, std::move(t));
}

Carrier product_carrier(const Carrier& x, const Carrier& y) {
  std::vector<std::string> names;
  names.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) names.push_back("(" + x.name(i) + "," + y.name(j) + ")");
  }
  return Carrier(std::move(names));
}

AtomMap projection_first(const Carrier& x, const Carrier& y) {
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) a.push_back(i);
  return AtomMap(product_carrier(x, y), x, std::move(a));
}

AtomMap projection_second(const Carrier& x, const Carrier& y) {
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) a.push_back(j);
  return AtomMap(product_carrier(x, y), y, std::move(a));
}

Convergence product(const Convergence& xi, const Convergence& tau, const Bounds& bounds) {
  const std::size_t nx = xi.size();
  const std::size_t ny = tau.size();
  if (nx * ny > bounds.max_product || nx * ny > kMaxAtoms) {
    throw BoundExceeded("product carrier of " + std::to_string(nx * ny) + " atoms exceeds bound " +
                        std::to_string(bounds.max_product));
  }
  const Carrier c = product_carrier(xi.carrier(), tau.carrier());
  std::vector<Subset> t(c.powerset_size());
  for (Subset::Bits k = 1; k < t.size(); ++k) {
    Subset p1, p2;
    Subset(k).for_each([&](std::size_t idx) {
      p1 |= Subset::atom(idx / ny);
      p2 |= Subset::atom(idx % ny);
    });
    const Subset l1 = xi.lim(p1);
    const Subset l2 = tau.lim(p2);
    Subset lim;
    l1.for_each([&](std::size_t i) {
      l2.for_each([&](std::size_t j) { lim |= Subset::atom(i * ny + j); });
    });
    t[k] = lim;
  }
  return Convergence(c, std::move(t));
}

Convergence product(std::span<const Convergence> xs, const Bounds& bounds) {
  if (xs.empty()) throw InputError("product of an empty family");
  Convergence acc = xs.front();
  for (const auto& x : xs.subspan(1)) acc = product(acc, x, bounds);
  return acc;
}

bool is_finitely_deep(const Convergence& xi) {
  const auto& t = xi.table();
  for (Subset::Bits a = 1; a < t.size(); ++a) {
    for (Subset::Bits b = a + 1; b < t.size(); ++b) {
      if (!(t[a] & t[b]).is_subset_of(t[a | b])) return false;
    }
  }
  return true;
}

}  // namespace convlab
