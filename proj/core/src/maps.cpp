#include "convlab/maps.hpp"

#include "convlab/compactness.hpp"

namespace convlab {

Subset Relation::apply(Subset s) const {
  Subset out;
  s.for_each([&](std::size_t w) { out |= image[w]; });
  return out;
}

Relation Relation::inverse_of(const AtomMap& f) {
  Relation r{f.codomain(), f.domain(), std::vector<Subset>(f.codomain().size())};
  for (std::size_t x = 0; x < f.domain().size(); ++x) r.image[f(x)] |= Subset::atom(x);
  return r;
}

namespace {

void require_surjective(const SpaceMap& m, const char* where) {
  if (!m.is_surjective()) throw InputError(std::string(where) + ": map is not surjective");
}

}  // namespace

bool is_J_quotient(const SpaceMap& m, const Functor& j) {
  require_surjective(m, "is_J_quotient");
  return is_finer(m.codomain(), j(final(m.map(), m.domain())));
}

bool is_J_quotient(const SpaceMap& m, FunctorTag j) { return is_J_quotient(m, functor(j)); }

std::optional<Subset> quotient_witness(const SpaceMap& m, FunctorTag j) {
  require_surjective(m, "quotient_witness");
  const Convergence target = reflect(final(m.map(), m.domain()), j);
  for (Subset::Bits k = 1; k < target.table().size(); ++k) {
    if (!m.codomain().lim(Subset(k)).is_subset_of(target.lim(Subset(k)))) return Subset(k);
  }
  return std::nullopt;
}

bool expanded_quotient(const SpaceMap& m, FilterClass h) {
  require_surjective(m, "expanded_quotient");
  const AtomMap& f = m.map();
  for (Subset::Bits k = 1; k < m.codomain().table().size(); ++k) {
    const Subset hk(k);
    if (!admits(h, hk)) continue;
    const Subset adh_target = adh_filter(m.codomain(), hk);
    const Subset adh_source = adh_filter(m.domain(), f.preimage(hk));
    bool ok = true;
    adh_target.for_each([&](std::size_t y) { ok = ok && f.preimage(Subset::atom(y)).meets(adh_source); });
    if (!ok) return false;
  }
  return true;
}

std::optional<Subset> expanded_quotient_literal_witness(const SpaceMap& m, FilterClass h) {
  require_surjective(m, "expanded_quotient_literal");
  const AtomMap& f = m.map();
  for (Subset::Bits k = 1; k < m.codomain().table().size(); ++k) {
    const Subset hk(k);
    if (!admits(h, hk)) continue;
    const Subset lhs = f.preimage(adh_filter(m.codomain(), hk));
    const Subset rhs = adh_filter(m.domain(), f.preimage(hk));
    if (!lhs.is_subset_of(rhs)) return hk;
  }
  return std::nullopt;
}

bool is_compact_relation(const Convergence& theta, const Convergence& sigma, const Relation& r, FilterClass h) {
  require_same_carrier(theta.carrier(), r.source, "is_compact_relation source");
  require_same_carrier(sigma.carrier(), r.target, "is_compact_relation target");
  std::vector<Subset> adh(sigma.table().size());
  for (Subset::Bits l = 1; l < adh.size(); ++l) adh[l] = adh_filter(sigma, Subset(l));
  for (Subset::Bits k = 1; k < theta.table().size(); ++k) {
    const Subset image = r.apply(Subset(k));
    bool ok = true;
    theta.table()[k].for_each([&](std::size_t w) {
      for (Subset::Bits l = 1; ok && l < adh.size(); ++l) {
        if (!admits(h, Subset(l)) || !Subset(l).meets(image)) continue;
        if (!r(w).meets(adh[l])) ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool is_H_perfect(const SpaceMap& m, FilterClass h) {
  require_surjective(m, "is_H_perfect");
  return is_compact_relation(m.codomain(), m.domain(), Relation::inverse_of(m.map()), h);
}

std::optional<Subset> perfect_witness(const SpaceMap& m, FilterClass h) {
  require_surjective(m, "expanded_perfect");
  const AtomMap& f = m.map();
  for (Subset::Bits g = 1; g < m.domain().table().size(); ++g) {
    if (!admits(h, Subset(g))) continue;
    const Subset lhs = adh_filter(m.codomain(), f.image(Subset(g)));
    const Subset rhs = f.image(adh_filter(m.domain(), Subset(g)));
    if (!lhs.is_subset_of(rhs)) return Subset(g);
  }
  return std::nullopt;
}

bool expanded_perfect(const SpaceMap& m, FilterClass h) { return !perfect_witness(m, h).has_value(); }

bool is_closed_map(const SpaceMap& m) {
  for (Subset::Bits a = 0; a < m.domain().carrier().powerset_size(); ++a) {
    if (is_closed(m.domain(), Subset(a)) && !is_closed(m.codomain(), m.map().image(Subset(a)))) return false;
  }
  return true;
}

std::optional<bool> is_open_map(const SpaceMap& m) {
  if (!is_topology(m.domain()) || !is_topology(m.codomain())) return std::nullopt;
  for (Subset::Bits a = 0; a < m.domain().carrier().powerset_size(); ++a) {
    if (is_open(m.domain(), Subset(a)) && !is_open(m.codomain(), m.map().image(Subset(a)))) return false;
  }
  return true;
}

bool perfect_display_literal(const SpaceMap& m, FilterClass h) {
  return is_finer(initial(m.map(), m.codomain()), adherence_determined(characteristic(m.domain()).table, h));
}

PerfectQuotientReport perfect_implies_quotient_check(const std::vector<SpaceMap>& corpus, FilterClass h) {
  PerfectQuotientReport r;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++r.checked;
    if (!expanded_perfect(corpus[i], h)) continue;
    ++r.perfect;
    if (!expanded_quotient(corpus[i], h)) r.violations.push_back(i);
  }
  return r;
}

MapClassification classify(const SpaceMap& m) {
  require_surjective(m, "classify");
  MapClassification c;
  const Carrier& y = m.codomain().carrier();
  c.continuous = is_continuous(m);
  c.open = is_open_map(m);

  auto level = [&](const char* name, FunctorTag j, bool& flag) {
    const auto w = quotient_witness(m, j);
    flag = !w.has_value();
    if (w) c.witnesses[name] = y.format(*w);
  };
  level("almost_open", FunctorTag::I, c.almost_open);
  level("biquotient", FunctorTag::S, c.biquotient);
  level("countably_biquotient", FunctorTag::A_F1, c.countably_biquotient);
  level("hereditarily_quotient", FunctorTag::S0, c.hereditarily_quotient);
  level("quotient", FunctorTag::T, c.quotient);

  auto perfect_level = [&](const char* name, FilterClass h, bool& flag) {
    flag = is_H_perfect(m, h);
    const auto w = perfect_witness(m, h);
    if (flag == w.has_value()) c.implication_failures.push_back(std::string(name) + ": relation and inclusion forms disagree");
    if (w) c.witnesses[name] = m.domain().carrier().format(*w);
  };
  perfect_level("perfect", FilterClass::all, c.perfect);
  perfect_level("countably_perfect", FilterClass::countably_based, c.countably_perfect);
  perfect_level("adherent", FilterClass::principal, c.adherent);
  c.closed = is_closed_map(m);
  if (!c.closed) c.witnesses["closed"] = "image of a closed set is not closed";

  auto implies = [&](bool a, bool b, const char* what) {
    if (a && !b) c.implication_failures.emplace_back(what);
  };
  implies(c.almost_open, c.biquotient, "almost open => biquotient");
  implies(c.biquotient, c.countably_biquotient, "biquotient => countably biquotient");
  implies(c.countably_biquotient, c.hereditarily_quotient, "countably biquotient => hereditarily quotient");
  implies(c.hereditarily_quotient, c.quotient, "hereditarily quotient => quotient");
  implies(c.perfect, c.countably_perfect, "perfect => countably perfect");
  implies(c.countably_perfect, c.adherent, "countably perfect => adherent");
  implies(c.perfect, c.biquotient, "perfect => biquotient");
  implies(c.countably_perfect, c.countably_biquotient, "countably perfect => countably biquotient");
  implies(c.adherent, c.hereditarily_quotient, "adherent => hereditarily quotient");
  implies(c.closed, c.quotient, "closed => quotient");
  return c;
}

}  // namespace convlab
