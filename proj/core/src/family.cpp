#include "convlab/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace convlab {

Carrier::Carrier(std::vector<std::string> names) {
  if (names.empty()) throw InputError("carrier must have at least one atom");
  if (names.size() > kMaxAtoms) {
    throw BoundExceeded("carrier of " + std::to_string(names.size()) +
                        " atoms exceeds structural limit " + std::to_string(kMaxAtoms));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("atom names must be non-empty");
    if (!seen.insert(n).second) throw InputError("duplicate atom name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Carrier Carrier::numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Carrier(std::move(names));
}

Carrier Carrier::lettered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Carrier(std::move(names));
}

std::optional<std::size_t> Carrier::index_of(const std::string& name) const {
  if (!names_) return std::nullopt;
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

Subset Carrier::subset(const std::vector<std::string>& members) const {
  Subset s;
  for (const auto& m : members) {
    auto i = index_of(m);
    if (!i) throw InputError("unknown atom '" + m + "'");
    s |= Subset::atom(*i);
  }
  return s;
}

std::vector<std::string> Carrier::names_of(Subset s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(name(i)); });
  return out;
}

std::string Carrier::format(Subset s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) os << ',';
    os << name(i);
    first = false;
  });
  os << '}';
  return os.str();
}

bool Carrier::operator==(const Carrier& o) const {
  if (names_ == o.names_) return true;
  if (!names_ || !o.names_) return false;
  return *names_ == *o.names_;
}

void require_same_carrier(const Carrier& a, const Carrier& b, const char* where) {
  if (!(a == b)) throw CarrierMismatch(std::string(where) + ": operands are on different carriers");
}

AtomMap::AtomMap(Carrier domain, Carrier codomain, std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (assignment_.size() != domain_.size()) throw InputError("map is not total on its domain");
  for (auto v : assignment_) {
    if (v >= codomain_.size()) throw InputError("map value outside codomain");
  }
}

AtomMap AtomMap::identity(const Carrier& c) {
  std::vector<std::size_t> a(c.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return AtomMap(c, c, std::move(a));
}

AtomMap AtomMap::relabel(const Carrier& from, const Carrier& to) {
  if (from.size() != to.size()) throw InputError("relabel needs carriers of equal size");
  std::vector<std::size_t> a(from.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return AtomMap(from, to, std::move(a));
}

Subset AtomMap::image(Subset s) const {
  Subset out;
  s.for_each([&](std::size_t i) { out |= Subset::atom(assignment_[i]); });
  return out;
}

Subset AtomMap::preimage(Subset s) const {
  Subset out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (s.contains(assignment_[i])) out |= Subset::atom(i);
  }
  return out;
}

bool AtomMap::is_surjective() const { return image(domain_.full()) == codomain_.full(); }

bool AtomMap::is_injective() const { return image(domain_.full()).size() == domain_.size(); }

std::vector<AtomMap> all_maps(const Carrier& domain, const Carrier& codomain) {
  std::vector<AtomMap> out;
  const std::size_t n = domain.size();
  const std::size_t k = codomain.size();
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    out.emplace_back(domain, codomain, digits);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < k) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::raw: return "raw";
    case FamilyKind::isotone: return "isotone";
    case FamilyKind::filter: return "filter";
    case FamilyKind::ideal: return "ideal";
    case FamilyKind::grill_of: return "grill-of";
  }
  return "raw";
}

SubsetFamily::SubsetFamily(Carrier carrier, std::vector<Subset> sets, FamilyKind kind)
    : carrier_(std::move(carrier)), sets_(std::move(sets)), kind_(kind) {
  const Subset full = carrier_.full();
  for (auto s : sets_) {
    if (!s.is_subset_of(full)) throw InputError("family member outside carrier");
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  switch (kind_) {
    case FamilyKind::raw: break;
    case FamilyKind::isotone:
    case FamilyKind::grill_of:
      if (!is_isotone()) throw InvariantViolation("family tagged isotone is not closed upward");
      break;
    case FamilyKind::filter:
      if (!is_filter()) throw InvariantViolation("family tagged filter is not a filter");
      break;
    case FamilyKind::ideal:
      if (!is_ideal()) throw InvariantViolation("family tagged ideal is not an ideal");
      break;
  }
}

SubsetFamily SubsetFamily::empty(const Carrier& c) { return SubsetFamily(c, {}, FamilyKind::isotone); }

SubsetFamily SubsetFamily::powerset(const Carrier& c) {
  std::vector<Subset> all;
  for (Subset::Bits b = 0; b < c.powerset_size(); ++b) all.emplace_back(b);
  return SubsetFamily(c, std::move(all), FamilyKind::filter);
}

SubsetFamily SubsetFamily::principal_filter(const Carrier& c, Subset kernel) {
  std::vector<Subset> sets;
  for (Subset::Bits b = 0; b < c.powerset_size(); ++b) {
    if (kernel.is_subset_of(Subset(b))) sets.emplace_back(b);
  }
  return SubsetFamily(c, std::move(sets), FamilyKind::filter);
}

SubsetFamily SubsetFamily::principal_ideal(const Carrier& c, Subset top) {
  std::vector<Subset> sets;
  for (Subset::Bits b = 0; b < c.powerset_size(); ++b) {
    if (Subset(b).is_subset_of(top)) sets.emplace_back(b);
  }
  return SubsetFamily(c, std::move(sets), FamilyKind::ideal);
}

SubsetFamily SubsetFamily::isotone_closure(const SubsetFamily& f) {
  std::vector<Subset> sets;
  for (Subset::Bits b = 0; b < f.carrier().powerset_size(); ++b) {
    Subset s(b);
    for (auto m : f.sets()) {
      if (m.is_subset_of(s)) {
        sets.push_back(s);
        break;
      }
    }
  }
  return SubsetFamily(f.carrier(), std::move(sets), FamilyKind::isotone);
}

bool SubsetFamily::contains(Subset s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

bool SubsetFamily::is_isotone() const {
  const std::size_t n = carrier_.size();
  for (auto s : sets_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.contains(i) && !contains(s | Subset::atom(i))) return false;
    }
  }
  return true;
}

bool SubsetFamily::is_filter() const {
  if (sets_.empty() || !is_isotone()) return false;
  for (auto a : sets_) {
    for (auto b : sets_) {
      if (!contains(a & b)) return false;
    }
  }
  return true;
}

bool SubsetFamily::is_ideal() const {
  if (sets_.empty()) return false;
  for (auto s : sets_) {
    bool down = true;
    s.for_each([&](std::size_t i) { down = down && contains(s.minus(Subset::atom(i))); });
    if (!down) return false;
  }
  for (auto a : sets_) {
    for (auto b : sets_) {
      if (!contains(a | b)) return false;
    }
  }
  return true;
}

FilterKernel::FilterKernel(Carrier carrier, Subset kernel) : carrier_(std::move(carrier)), kernel_(kernel) {
  if (kernel_.empty()) throw InputError("filter kernel must be non-empty (proper filter)");
  if (!kernel_.is_subset_of(carrier_.full())) throw InputError("filter kernel outside carrier");
}

bool FilterKernel::is_finer_than(const FilterKernel& d) const {
  require_same_carrier(carrier_, d.carrier_, "is_finer_than");
  return kernel_.is_subset_of(d.kernel_);
}

SubsetFamily grill(const SubsetFamily& family) {
  std::vector<Subset> out;
  for (Subset::Bits b = 0; b < family.carrier().powerset_size(); ++b) {
    Subset h(b);
    bool ok = true;
    for (auto a : family.sets()) {
      if (!a.meets(h)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(h);
  }
  return SubsetFamily(family.carrier(), std::move(out), FamilyKind::grill_of);
}

bool mesh(const SubsetFamily& a, const SubsetFamily& b) {
  require_same_carrier(a.carrier(), b.carrier(), "mesh");
  for (auto x : a.sets()) {
    for (auto y : b.sets()) {
      if (!x.meets(y)) return false;
    }
  }
  return true;
}

SubsetFamily complements(const SubsetFamily& family) {
  const Subset full = family.carrier().full();
  std::vector<Subset> out;
  out.reserve(family.size());
  for (auto s : family.sets()) out.push_back(full.minus(s));
  FamilyKind kind = FamilyKind::raw;
  if (family.kind() == FamilyKind::ideal) kind = FamilyKind::filter;
  if (family.kind() == FamilyKind::filter) kind = FamilyKind::ideal;
  return SubsetFamily(family.carrier(), std::move(out), kind);
}

std::vector<std::size_t> finer_ultrafilters(const FilterKernel& f) {
  std::vector<std::size_t> out;
  f.kernel().for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

SubsetFamily image_family(const AtomMap& f, const SubsetFamily& a) {
  require_same_carrier(f.domain(), a.carrier(), "image_family");
  std::vector<Subset> out;
  for (auto s : a.sets()) out.push_back(f.image(s));
  return SubsetFamily(f.codomain(), std::move(out));
}

SubsetFamily preimage_family(const AtomMap& f, const SubsetFamily& b) {
  require_same_carrier(f.codomain(), b.carrier(), "preimage_family");
  std::vector<Subset> out;
  for (auto s : b.sets()) out.push_back(f.preimage(s));
  return SubsetFamily(f.domain(), std::move(out));
}

std::vector<Subset> nonempty_subsets(const Carrier& c) {
  std::vector<Subset> out;
  out.reserve(c.powerset_size() - 1);
  for (Subset::Bits b = 1; b < c.powerset_size(); ++b) out.emplace_back(b);
  return out;
}

}  // namespace convlab
