#include "convlab/compactness.hpp"

#include <cstdint>

namespace convlab {

namespace {

bool meshes_all(Subset k, const SubsetFamily& f) {
  for (auto m : f.sets()) {
    if (!k.meets(m)) return false;
  }
  return true;
}

}  // namespace

bool is_cover(const Convergence& xi, const SubsetFamily& p, Subset a) {
  require_same_carrier(xi.carrier(), p.carrier(), "is_cover");
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    if (!xi.table()[k].meets(a)) continue;
    bool caught = false;
    for (auto m : p.sets()) {
      if (Subset(k).is_subset_of(m)) {
        caught = true;
        break;
      }
    }
    if (!caught) return false;
  }
  return true;
}

bool cover_criterion(const Convergence& xi, const SubsetFamily& p, Subset a) {
  return !adh_family(xi, complements(p)).meets(a);
}

CoverCheck check_cover(const Convergence& xi, const SubsetFamily& p, Subset a) {
  return {is_cover(xi, p, a), cover_criterion(xi, p, a)};
}

Verdict is_cover_compact(const Convergence&, Subset) {
  return {true, true, "finite carrier: every cover is finite"};
}

bool is_compact_at(const Convergence& xi, const SubsetFamily& a, const SubsetFamily& b, FilterClass h) {
  require_same_carrier(xi.carrier(), a.carrier(), "is_compact_at");
  require_same_carrier(xi.carrier(), b.carrier(), "is_compact_at");
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    if (!admits(h, Subset(k)) || !meshes_all(Subset(k), a)) continue;
    if (!meshes_all(adh_filter(xi, Subset(k)), b)) return false;
  }
  return true;
}

bool is_set_compact_at(const Convergence& xi, Subset a, Subset b) {
  return is_compact_at(xi, SubsetFamily(xi.carrier(), {a}), SubsetFamily(xi.carrier(), {b}));
}

bool is_compactoid(const Convergence& xi, const SubsetFamily& a) {
  return is_compact_at(xi, a, SubsetFamily(xi.carrier(), {xi.carrier().full()}));
}

bool is_filter_compact_at_point(const Convergence& xi, Subset kernel, std::size_t x) {
  return is_compact_at(xi, SubsetFamily::principal_filter(xi.carrier(), kernel),
                       SubsetFamily(xi.carrier(), {Subset::atom(x)}));
}

Verdict is_set_compact(const Convergence& xi, Subset a) {
  return {is_set_compact_at(xi, a, a), true, "finite carrier: every set is compact"};
}

bool ideal_cover_compactness(const Convergence& xi, Subset a) {
  // Every ideal on a finite carrier is principal: ↓D for some D.
  for (Subset::Bits d = 0; d < xi.carrier().powerset_size(); ++d) {
    const auto ideal = SubsetFamily::principal_ideal(xi.carrier(), Subset(d));
    if (is_cover(xi, ideal, a) && !ideal.contains(a)) return false;
  }
  return true;
}

CharacteristicConvergence characteristic(const Convergence& xi) {
  std::vector<Subset> t(xi.table().size());
  for (std::size_t k = 1; k < t.size(); ++k) t[k] = xi.table()[k].empty() ? Subset{} : xi.carrier().full();
  return {xi, Convergence(xi.carrier(), std::move(t))};
}

CompactoidVerdict compactoid_filter(const Convergence& xi, Subset kernel) {
  const bool definitional = is_compactoid(xi, SubsetFamily::principal_filter(xi.carrier(), kernel));
  const Convergence s_chi = pseudotopologize(characteristic(xi).table);
  const bool characteristic = !s_chi.lim(kernel).empty();
  return {definitional, characteristic, true};
}

bool is_h_compactoid(const Convergence& xi, Subset kernel, FilterClass h) {
  return !adherence_determined(characteristic(xi).table, h).lim(kernel).empty();
}

namespace {

using FamilyBits = std::uint64_t;

bool isotone_bits(FamilyBits f, std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t s = 0; s < subsets; ++s) {
    if (!((f >> s) & 1U)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t up = s | (std::size_t{1} << i);
      if (!((f >> up) & 1U)) return false;
    }
  }
  return true;
}

std::vector<FamilyBits> isotone_families(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<FamilyBits> out;
  const FamilyBits limit = FamilyBits{1} << subsets;
  for (FamilyBits f = 0; f < limit; ++f) {
    if (isotone_bits(f, n)) out.push_back(f);
  }
  return out;
}

std::vector<Subset> members(FamilyBits f, std::size_t subsets) {
  std::vector<Subset> out;
  for (std::size_t s = 0; s < subsets; ++s) {
    if ((f >> s) & 1U) out.emplace_back(static_cast<Subset::Bits>(s));
  }
  return out;
}

}  // namespace

std::size_t count_isotone_families(std::size_t n) {
  if (n > 4) throw BoundExceeded("isotone family enumeration limited to 4 atoms");
  return isotone_families(n).size();
}

KappaReport kappa(const Convergence& xi, const Bounds& bounds) {
  const std::size_t n = xi.size();
  if (n > bounds.max_kappa_carrier || n > 4) {
    throw BoundExceeded("kappa enumeration limited to " + std::to_string(bounds.max_kappa_carrier) + " atoms");
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Subset> adh(subsets);
  for (Subset::Bits k = 1; k < subsets; ++k) adh[k] = adh_filter(xi, Subset(k));

  auto compact = [&](FamilyBits f) {
    const auto ms = members(f, subsets);
    for (Subset::Bits k = 1; k < subsets; ++k) {
      bool meshes = true;
      for (auto m : ms) meshes = meshes && Subset(k).meets(m);
      if (!meshes) continue;
      for (auto m : ms) {
        if (!adh[k].meets(m)) return false;
      }
    }
    return true;
  };

  std::vector<FamilyBits> kept;
  for (auto f : isotone_families(n)) {
    if (compact(f)) kept.push_back(f);
  }
  KappaReport r;
  auto in_kappa = [&](FamilyBits f) {
    for (auto g : kept) {
      if (g == f) return true;
    }
    return false;
  };
  const FamilyBits all = subsets == 64 ? ~FamilyBits{0} : (FamilyBits{1} << subsets) - 1;
  r.contains_empty = in_kappa(0);
  r.contains_powerset = in_kappa(all);
  r.union_closed = true;
  r.intersection_closed = true;
  for (auto a : kept) {
    for (auto b : kept) {
      if (!in_kappa(a | b)) r.union_closed = false;
      if (!in_kappa(a & b)) r.intersection_closed = false;
    }
  }
  for (auto f : kept) r.families.emplace_back(xi.carrier(), members(f, subsets), FamilyKind::isotone);
  return r;
}

TikhonovReport tikhonov_check(const Convergence& xi, const Convergence& tau, const Bounds& bounds) {
  TikhonovReport r;
  const Convergence prod = product(xi, tau, bounds);
  const Convergence chi_x = characteristic(xi).table;
  const Convergence chi_t = characteristic(tau).table;
  const Convergence chi_product = product(chi_x, chi_t, bounds);
  r.characteristic_of_product = characteristic(prod).table == chi_product;
  r.s_commutes = pseudotopologize(chi_product) == product(pseudotopologize(chi_x), pseudotopologize(chi_t), bounds);

  const AtomMap p1 = projection_first(xi.carrier(), tau.carrier());
  const AtomMap p2 = projection_second(xi.carrier(), tau.carrier());
  const Convergence s_whole = pseudotopologize(characteristic(prod).table);
  const Convergence s_x = pseudotopologize(chi_x);
  const Convergence s_t = pseudotopologize(chi_t);
  r.compactoid_biconditional = true;
  for (Subset::Bits k = 1; k < prod.table().size(); ++k) {
    const bool whole = !s_whole.lim(Subset(k)).empty();
    const bool parts = !s_x.lim(p1.image(Subset(k))).empty() && !s_t.lim(p2.image(Subset(k))).empty();
    ++r.kernels_checked;
    if (whole != parts) r.compactoid_biconditional = false;
  }
  return r;
}

}  // namespace convlab
