#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convlab/convergence.hpp"

namespace convlab {

/// Filter classes F₀ ⊆ H ⊆ F used by adherence-determined constructions.
/// On a finite carrier every filter is principal, so every class admits
/// every kernel; the tag is kept so constructions stay parameterized.
enum class FilterClass { principal, countably_based, countably_deep, all };

const char* to_string(FilterClass h);
bool admits(FilterClass h, Subset kernel);

enum class FunctorTag { I, S0, S, T, A_F0, A_F1, A_F, EpiSier, EpiBour };

const char* to_string(FunctorTag t);
std::optional<FunctorTag> functor_tag_from_string(const std::string& s);

/// A named concrete endofunctor on convergences.
struct Functor {
  FunctorTag tag;
  std::string name;
  std::function<Convergence(const Convergence&)> apply;

  Convergence operator()(const Convergence& xi) const { return apply(xi); }
};

/// Reflector for any tag except the Epi ones (see duality.hpp).
Functor functor(FunctorTag tag);

/// V(x) = ⋂{F : x ∈ lim F}; kernel = union of kernels converging to x.
FilterKernel vicinity(const Convergence& xi, std::size_t x);

/// x ∈ adh A iff A meets the vicinity kernel of x.
Subset adh_set(const Convergence& xi, Subset a);
/// Union of lim H over filters H meshing the family. The family {∅} has
/// empty adherence; the empty family adheres everywhere.
Subset adh_family(const Convergence& xi, const SubsetFamily& a);
/// Adherence of the filter K↑ as union of limits of finer ultrafilters.
Subset adh_filter(const Convergence& xi, Subset kernel);

/// Least adh-closed superset, by iterating adherence to a fixpoint.
Subset closure(const Convergence& xi, Subset a);
/// ⋂{H ⊇ A : adh H ⊆ H}; used to cross-check closure().
Subset closure_by_intersection(const Convergence& xi, Subset a);
/// X ∖ adh(X ∖ P).
Subset inherence(const Convergence& xi, Subset p);
bool is_closed(const Convergence& xi, Subset a);
bool is_open(const Convergence& xi, Subset a);
/// adh(adh A) = adh A for every A.
bool is_adherence_idempotent(const Convergence& xi);

/// lim K = ⋂_{H ∈ class, H # K↑} adh H.
Convergence adherence_determined(const Convergence& xi, FilterClass h);
/// lim K = ⋂_{x ∈ K} lim {x}↑ (ultrafilter form).
Convergence pseudotopologize(const Convergence& xi);
/// lim K = ⋂_{H meeting K} adh H (grill form over sets).
Convergence pretopologize(const Convergence& xi);
/// lim K = ⋂_{H meeting K} cl H.
Convergence topologize(const Convergence& xi);

/// Applies I, S0, S, T, A_F0, A_F1 or A_F. Throws InputError for others.
Convergence reflect(const Convergence& xi, FunctorTag j);

struct PavingReport {
  std::size_t point;
  std::size_t paving_number;
  std::vector<Subset> witness_pavement;  // maximal converging kernels
};

/// Least size of a pavement at x: the number of ⊆-maximal kernels converging to x.
PavingReport paving(const Convergence& xi, std::size_t x);

bool is_pretopology(const Convergence& xi);
/// T-fixed.
bool is_topology(const Convergence& xi);
/// S-fixed.
bool is_pseudotopology(const Convergence& xi);

struct FunctorCorpus {
  std::vector<Convergence> spaces;
  std::vector<SpaceMap> maps;
};

struct LawResult {
  std::string law;
  bool asserted = true;  // false: search mode, a failure is a discovery
  bool holds = true;
  std::size_t checked = 0;
  std::string witness;
};

struct LawReport {
  std::string functor;
  std::vector<LawResult> laws;
  /// Every asserted law holds.
  bool ok() const;
  const LawResult* find(const std::string& law) const;
};

/// Checks concreteness, descent, idempotence, monotonicity, continuity
/// preservation and commutation with initial convergences on the corpus.
/// Commutation is asserted only for the adherence-determined reflectors.
LawReport check_functor_laws(const Functor& j, const FunctorCorpus& corpus);

}  // namespace convlab
