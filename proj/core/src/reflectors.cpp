#include "convlab/reflectors.hpp"

#include <map>

namespace convlab {

const char* to_string(FilterClass h) {
  switch (h) {
    case FilterClass::principal: return "F0";
    case FilterClass::countably_based: return "F1";
    case FilterClass::countably_deep: return "F^1";
    case FilterClass::all: return "F";
  }
  return "F";
}

bool admits(FilterClass, Subset kernel) { return !kernel.empty(); }

const char* to_string(FunctorTag t) {
  switch (t) {
    case FunctorTag::I: return "I";
    case FunctorTag::S0: return "S0";
    case FunctorTag::S: return "S";
    case FunctorTag::T: return "T";
    case FunctorTag::A_F0: return "A_F0";
    case FunctorTag::A_F1: return "A_F1";
    case FunctorTag::A_F: return "A_F";
    case FunctorTag::EpiSier: return "EpiSier";
    case FunctorTag::EpiBour: return "EpiBour";
  }
  return "?";
}

std::optional<FunctorTag> functor_tag_from_string(const std::string& s) {
  static const std::map<std::string, FunctorTag> tags = {
      {"I", FunctorTag::I},       {"S0", FunctorTag::S0},       {"S", FunctorTag::S},
      {"T", FunctorTag::T},       {"A_F0", FunctorTag::A_F0},   {"A_F1", FunctorTag::A_F1},
      {"A_F", FunctorTag::A_F},   {"EpiSier", FunctorTag::EpiSier}, {"EpiBour", FunctorTag::EpiBour}};
  auto it = tags.find(s);
  if (it == tags.end()) return std::nullopt;
  return it->second;
}

Functor functor(FunctorTag tag) {
  if (tag == FunctorTag::EpiSier || tag == FunctorTag::EpiBour) {
    throw InputError("Epi functors are provided by duality::epi_functor");
  }
  return Functor{tag, to_string(tag), [tag](const Convergence& xi) { return reflect(xi, tag); }};
}

FilterKernel vicinity(const Convergence& xi, std::size_t x) {
  Subset v;
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    if (xi.table()[k].contains(x)) v |= Subset(k);
  }
  return FilterKernel(xi.carrier(), v);
}

namespace {

std::vector<Subset> vicinity_kernels(const Convergence& xi) {
  std::vector<Subset> v(xi.size());
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    xi.table()[k].for_each([&](std::size_t x) { v[x] |= Subset(k); });
  }
  return v;
}

Subset adh_from_vicinities(const std::vector<Subset>& v, Subset a) {
  Subset out;
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x].meets(a)) out |= Subset::atom(x);
  }
  return out;
}

// adh_set for every subset, indexed by bits.
std::vector<Subset> adherence_table(const Convergence& xi) {
  const auto v = vicinity_kernels(xi);
  std::vector<Subset> t(xi.carrier().powerset_size());
  for (Subset::Bits a = 0; a < t.size(); ++a) t[a] = adh_from_vicinities(v, Subset(a));
  return t;
}

Subset close_with(const std::vector<Subset>& adh, Subset a) {
  Subset cur = a;
  while (true) {
    const Subset next = cur | adh[cur.bits()];
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

Subset adh_set(const Convergence& xi, Subset a) { return adh_from_vicinities(vicinity_kernels(xi), a); }

Subset adh_family(const Convergence& xi, const SubsetFamily& a) {
  require_same_carrier(xi.carrier(), a.carrier(), "adh_family");
  Subset out;
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    bool meshes = true;
    for (auto m : a.sets()) {
      if (!Subset(k).meets(m)) {
        meshes = false;
        break;
      }
    }
    if (meshes) out |= xi.table()[k];
  }
  return out;
}

Subset adh_filter(const Convergence& xi, Subset kernel) {
  Subset out;
  kernel.for_each([&](std::size_t x) { out |= xi.lim(Subset::atom(x)); });
  return out;
}

Subset closure(const Convergence& xi, Subset a) {
  const auto v = vicinity_kernels(xi);
  Subset cur = a;
  while (true) {
    const Subset next = cur | adh_from_vicinities(v, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

Subset closure_by_intersection(const Convergence& xi, Subset a) {
  const auto adh = adherence_table(xi);
  Subset out = xi.carrier().full();
  for (Subset::Bits h = 0; h < adh.size(); ++h) {
    if (a.is_subset_of(Subset(h)) && adh[h].is_subset_of(Subset(h))) out &= Subset(h);
  }
  return out;
}

Subset inherence(const Convergence& xi, Subset p) {
  const Subset full = xi.carrier().full();
  return full.minus(adh_set(xi, full.minus(p)));
}

bool is_closed(const Convergence& xi, Subset a) { return adh_set(xi, a).is_subset_of(a); }

bool is_open(const Convergence& xi, Subset a) { return is_closed(xi, xi.carrier().full().minus(a)); }

bool is_adherence_idempotent(const Convergence& xi) {
  const auto adh = adherence_table(xi);
  for (Subset::Bits a = 0; a < adh.size(); ++a) {
    if (adh[adh[a].bits()] != adh[a]) return false;
  }
  return true;
}

Convergence adherence_determined(const Convergence& xi, FilterClass h) {
  const auto& t = xi.table();
  // Adherence of L↑ by the meshing formula: union of lim K over K meeting L.
  std::vector<Subset> adh_principal(t.size());
  for (Subset::Bits l = 1; l < t.size(); ++l) {
    Subset out;
    for (Subset::Bits k = 1; k < t.size(); ++k) {
      if (Subset(k).meets(Subset(l))) out |= t[k];
    }
    adh_principal[l] = out;
  }
  std::vector<Subset> r(t.size());
  for (Subset::Bits k = 1; k < t.size(); ++k) {
    Subset lim = xi.carrier().full();
    for (Subset::Bits l = 1; l < t.size(); ++l) {
      if (admits(h, Subset(l)) && Subset(l).meets(Subset(k))) lim &= adh_principal[l];
    }
    r[k] = lim;
  }
  return Convergence(xi.carrier(), std::move(r));
}

Convergence pseudotopologize(const Convergence& xi) {
  std::vector<Subset> r(xi.table().size());
  for (Subset::Bits k = 1; k < r.size(); ++k) {
    Subset lim = xi.carrier().full();
    Subset(k).for_each([&](std::size_t x) { lim &= xi.lim(Subset::atom(x)); });
    r[k] = lim;
  }
  return Convergence(xi.carrier(), std::move(r));
}

Convergence pretopologize(const Convergence& xi) {
  const auto adh = adherence_table(xi);
  std::vector<Subset> r(adh.size());
  for (Subset::Bits k = 1; k < r.size(); ++k) {
    Subset lim = xi.carrier().full();
    for (Subset::Bits hs = 1; hs < adh.size(); ++hs) {
      if (Subset(hs).meets(Subset(k))) lim &= adh[hs];
    }
    r[k] = lim;
  }
  return Convergence(xi.carrier(), std::move(r));
}

Convergence topologize(const Convergence& xi) {
  const auto adh = adherence_table(xi);
  std::vector<Subset> cl(adh.size());
  for (Subset::Bits h = 0; h < adh.size(); ++h) cl[h] = close_with(adh, Subset(h));
  std::vector<Subset> r(adh.size());
  for (Subset::Bits k = 1; k < r.size(); ++k) {
    Subset lim = xi.carrier().full();
    for (Subset::Bits hs = 1; hs < cl.size(); ++hs) {
      if (Subset(hs).meets(Subset(k))) lim &= cl[hs];
    }
    r[k] = lim;
  }
  return Convergence(xi.carrier(), std::move(r));
}

Convergence reflect(const Convergence& xi, FunctorTag j) {
  switch (j) {
    case FunctorTag::I: return xi;
    case FunctorTag::S0: return pretopologize(xi);
    case FunctorTag::S: return pseudotopologize(xi);
    case FunctorTag::T: return topologize(xi);
    case FunctorTag::A_F0: return adherence_determined(xi, FilterClass::principal);
    case FunctorTag::A_F1: return adherence_determined(xi, FilterClass::countably_based);
    case FunctorTag::A_F: return adherence_determined(xi, FilterClass::all);
    case FunctorTag::EpiSier:
    case FunctorTag::EpiBour: break;
  }
  throw InputError(std::string("reflect: unsupported functor ") + to_string(j));
}

PavingReport paving(const Convergence& xi, std::size_t x) {
  const auto& t = xi.table();
  std::vector<Subset> converging;
  for (Subset::Bits k = 1; k < t.size(); ++k) {
    if (t[k].contains(x)) converging.emplace_back(k);
  }
  PavingReport report{x, 0, {}};
  for (auto k : converging) {
    bool maximal = true;
    for (auto other : converging) {
      if (other != k && k.is_subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) report.witness_pavement.push_back(k);
  }
  report.paving_number = report.witness_pavement.size();
  return report;
}

bool is_pretopology(const Convergence& xi) {
  const auto v = vicinity_kernels(xi);
  for (std::size_t x = 0; x < xi.size(); ++x) {
    if (!xi.lim(v[x]).contains(x)) return false;
  }
  return true;
}

bool is_topology(const Convergence& xi) { return topologize(xi) == xi; }

bool is_pseudotopology(const Convergence& xi) { return pseudotopologize(xi) == xi; }

bool LawReport::ok() const {
  for (const auto& l : laws) {
    if (l.asserted && !l.holds) return false;
  }
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

namespace {

std::string describe(const Convergence& xi) {
  std::string s = "[";
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    if (k > 1) s += ' ';
    s += xi.carrier().format(Subset(k)) + "->" + xi.carrier().format(xi.table()[k]);
  }
  return s + "]";
}

void fail(LawResult& r, std::string witness) {
  if (r.holds) {
    r.holds = false;
    r.witness = std::move(witness);
  }
}

}  // namespace

LawReport check_functor_laws(const Functor& j, const FunctorCorpus& corpus) {
  LawReport report{j.name, {}};
  auto law = [](const char* name) {
    LawResult r;
    r.law = name;
    return r;
  };
  LawResult concrete = law("concrete"), descending = law("descending"), idempotent = law("idempotent"),
            increasing = law("increasing"), continuity = law("preserves-continuity"),
            initial_comm = law("commutes-with-initial");
  const bool adherence_determined_tag = j.tag == FunctorTag::S0 || j.tag == FunctorTag::S ||
                                        j.tag == FunctorTag::A_F0 || j.tag == FunctorTag::A_F1 ||
                                        j.tag == FunctorTag::A_F || j.tag == FunctorTag::I;
  initial_comm.asserted = adherence_determined_tag;

  std::vector<Convergence> images;
  images.reserve(corpus.spaces.size());
  for (const auto& xi : corpus.spaces) {
    Convergence jx = j(xi);
    ++concrete.checked;
    if (!(jx.carrier() == xi.carrier())) fail(concrete, describe(xi));
    ++descending.checked;
    if (!is_finer(xi, jx)) fail(descending, describe(xi));
    ++idempotent.checked;
    if (!(j(jx) == jx)) fail(idempotent, describe(xi));
    images.push_back(std::move(jx));
  }
  for (std::size_t a = 0; a < corpus.spaces.size(); ++a) {
    for (std::size_t b = 0; b < corpus.spaces.size(); ++b) {
      const auto& x0 = corpus.spaces[a];
      const auto& x1 = corpus.spaces[b];
      if (!(x0.carrier() == x1.carrier()) || !is_finer(x1, x0)) continue;
      ++increasing.checked;
      if (!is_finer(images[b], images[a])) fail(increasing, describe(x0) + " <= " + describe(x1));
    }
  }
  for (const auto& m : corpus.maps) {
    const Convergence jd = j(m.domain());
    const Convergence jc = j(m.codomain());
    if (is_continuous(m)) {
      ++continuity.checked;
      if (!is_continuous(m.map(), jd, jc)) fail(continuity, describe(m.domain()) + " -> " + describe(m.codomain()));
    }
    ++initial_comm.checked;
    if (!(j(initial(m.map(), m.codomain())) == initial(m.map(), jc))) {
      std::string w = "f=";
      for (auto v : m.map().assignment()) w += std::to_string(v);
      fail(initial_comm, w + " tau=" + describe(m.codomain()));
    }
  }
  report.laws = {concrete, descending, idempotent, increasing, continuity, initial_comm};
  return report;
}

}  // namespace convlab
