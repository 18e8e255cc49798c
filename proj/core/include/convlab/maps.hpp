#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convlab/reflectors.hpp"

namespace convlab {

/// Set-valued relation between carriers; image[w] ⊆ target.
struct Relation {
  Carrier source;
  Carrier target;
  std::vector<Subset> image;

  Subset operator()(std::size_t w) const { return image[w]; }
  Subset apply(Subset s) const;
  /// The fiber relation y ↦ f⁻(y) of a map.
  static Relation inverse_of(const AtomMap& f);
};

/// τ ≥ J(fξ). Continuity is not required. Throws InputError if not surjective.
bool is_J_quotient(const SpaceMap& m, const Functor& j);
bool is_J_quotient(const SpaceMap& m, FunctorTag j);

/// Kernel M on the codomain where lim_τ M ⊄ lim_{J(fξ)} M, if any.
std::optional<Subset> quotient_witness(const SpaceMap& m, FunctorTag j);

/// For each H in the class, every y ∈ adh_τ H has a fiber meeting
/// adh_ξ f⁻[H]; equivalently adh_τ H ⊆ f(adh_ξ f⁻[H]).
bool expanded_quotient(const SpaceMap& m, FilterClass h);
/// The set inclusion f⁻(adh_τ H) ⊆ adh_ξ f⁻[H] read literally. Returns a
/// failing kernel H, if any. Stronger than H-quotient on non-injective maps.
std::optional<Subset> expanded_quotient_literal_witness(const SpaceMap& m, FilterClass h);

/// w ∈ lim_θ F implies R(w) # adh_σ H for each H in the class with H # R[F].
bool is_compact_relation(const Convergence& theta, const Convergence& sigma, const Relation& r,
                         FilterClass h = FilterClass::all);

/// The fiber relation f⁻ is H-compact (θ = codomain, σ = domain).
bool is_H_perfect(const SpaceMap& m, FilterClass h);
/// adh_τ f[G] ⊆ f(adh_ξ G) for each G in the class.
bool expanded_perfect(const SpaceMap& m, FilterClass h);
/// Kernel G on the domain where the perfect inclusion fails, if any.
std::optional<Subset> perfect_witness(const SpaceMap& m, FilterClass h);

/// Images of ξ-closed sets are τ-closed.
bool is_closed_map(const SpaceMap& m);
/// Images of open sets are open; defined only when both ends are topologies.
std::optional<bool> is_open_map(const SpaceMap& m);

/// f⁻τ ≥ A_H(χ_ξ), read with χ_ξ as defined. Kept for search only.
bool perfect_display_literal(const SpaceMap& m, FilterClass h);

struct PerfectQuotientReport {
  std::size_t checked = 0;
  std::size_t perfect = 0;
  std::vector<std::size_t> violations;  // corpus indices where perfect ∧ ¬quotient
  bool holds() const { return violations.empty(); }
};

/// expanded_perfect(m, h) ⇒ expanded_quotient(m, h) on every corpus map.
PerfectQuotientReport perfect_implies_quotient_check(const std::vector<SpaceMap>& corpus,
                                                     FilterClass h = FilterClass::all);

struct MapClassification {
  bool continuous = false;
  std::optional<bool> open;
  bool almost_open = false;
  bool biquotient = false;
  bool countably_biquotient = false;
  bool hereditarily_quotient = false;
  bool quotient = false;
  bool perfect = false;
  bool countably_perfect = false;
  bool adherent = false;
  bool closed = false;
  /// Witness kernels (rendered) for each failed level.
  std::map<std::string, std::string> witnesses;
  /// Broken chain or perfect-map implications; empty on a correct build.
  std::vector<std::string> implication_failures;
};

MapClassification classify(const SpaceMap& m);

}  // namespace convlab
