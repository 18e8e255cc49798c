#pragma once

#include <string>
#include <vector>

#include "convlab/reflectors.hpp"

namespace convlab {

/// A boolean answer that may be forced by finiteness of the carrier.
struct Verdict {
  bool value = false;
  bool degenerate = false;
  std::string note;

  explicit operator bool() const { return value; }
};

struct CoverCheck {
  bool definition;  // every filter converging into A contains a member of P
  bool criterion;   // adh(P_c) ∩ A = ∅
  bool consistent() const { return definition == criterion; }
};

/// P is a ξ-cover of A: for each kernel K with lim K ∩ A ≠ ∅ some P ∈ P contains K.
bool is_cover(const Convergence& xi, const SubsetFamily& p, Subset a);
/// adh(P_c) ∩ A = ∅.
bool cover_criterion(const Convergence& xi, const SubsetFamily& p, Subset a);
CoverCheck check_cover(const Convergence& xi, const SubsetFamily& p, Subset a);

/// Always true on a finite carrier (every cover is its own finite subcover).
Verdict is_cover_compact(const Convergence& xi, Subset a);

/// A is ξ-H-compact at B: for each filter H in the class with A ⊆ H^#,
/// adh H meets every member of B.
bool is_compact_at(const Convergence& xi, const SubsetFamily& a, const SubsetFamily& b,
                   FilterClass h = FilterClass::all);
bool is_set_compact_at(const Convergence& xi, Subset a, Subset b);
/// Compact at the whole carrier.
bool is_compactoid(const Convergence& xi, const SubsetFamily& a);
/// K↑ compact at {x}; equivalent to x ∈ lim_{Sξ} K↑.
bool is_filter_compact_at_point(const Convergence& xi, Subset kernel, std::size_t x);
/// A compact at itself. Every set is compact on a finite carrier.
Verdict is_set_compact(const Convergence& xi, Subset a);

/// A ∈ P for every ideal ξ-cover P of A.
bool ideal_cover_compactness(const Convergence& xi, Subset a);

struct CharacteristicConvergence {
  Convergence base;
  Convergence table;  // lim K = X if lim_base K ≠ ∅ else ∅
};

CharacteristicConvergence characteristic(const Convergence& xi);

struct CompactoidVerdict {
  bool definitional;    // every kernel meshing K↑ has nonempty adherence
  bool characteristic;  // lim_{S χ_ξ} K ≠ ∅
  bool degenerate;
  bool consistent() const { return definitional == characteristic; }
};

CompactoidVerdict compactoid_filter(const Convergence& xi, Subset kernel);

/// lim_{A_H χ_ξ} K ≠ ∅.
bool is_h_compactoid(const Convergence& xi, Subset kernel, FilterClass h);

struct KappaReport {
  std::vector<SubsetFamily> families;  // isotone ξ-compact families
  bool contains_empty = false;
  bool contains_powerset = false;
  bool union_closed = false;
  bool intersection_closed = false;
  bool laws_hold() const { return contains_empty && contains_powerset && union_closed && intersection_closed; }
};

/// Enumerates every isotone family and keeps the ξ-compact ones.
/// Throws BoundExceeded above bounds.max_kappa_carrier.
KappaReport kappa(const Convergence& xi, const Bounds& bounds = {});

/// Number of isotone families on n atoms (Dedekind numbers), by enumeration.
std::size_t count_isotone_families(std::size_t n);

struct TikhonovReport {
  bool characteristic_of_product = false;  // χ(ξ×τ) = χξ × χτ
  bool s_commutes = false;                 // S(χξ × χτ) = Sχξ × Sχτ
  bool compactoid_biconditional = false;   // for every kernel on the product
  std::size_t kernels_checked = 0;
  bool holds() const { return characteristic_of_product && s_commutes && compactoid_biconditional; }
};

TikhonovReport tikhonov_check(const Convergence& xi, const Convergence& tau, const Bounds& bounds = {});

}  // namespace convlab
