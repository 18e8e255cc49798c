#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convlab/family.hpp"

namespace convlab {

/// Size knobs. Defaults follow the documented configuration; the CLI reads
/// CONVLAB_MAX_CARRIER from the environment.
struct Bounds {
  std::size_t max_carrier = 5;
  std::size_t max_product = 9;
  /// Largest function space whose dual table is materialized.
  std::size_t max_functions = 12;
  /// Largest first dual handled by the streaming exponential-hull route.
  std::size_t max_epi_functions = 27;
  /// Largest candidate count |Y|^|X| scanned when enumerating C(ξ,σ).
  std::size_t max_function_candidates = std::size_t{1} << 22;
  std::size_t max_kappa_carrier = 4;
};

/// A convergence on a finite carrier, stored as the total table
/// kernel ↦ lim K↑ over all 2^n − 1 nonempty kernels. Construction checks
/// the point axiom (x ∈ lim {x}↑) and monotonicity (K ⊆ K′ ⇒ lim K′ ⊆ lim K).
class Convergence {
 public:
  /// table[k] is lim of the kernel with bits k; table[0] is ignored.
  Convergence(Carrier carrier, std::vector<Subset> table);

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  Subset lim(Subset kernel) const { return table_[kernel.bits()]; }
  const std::vector<Subset>& table() const { return table_; }

  static Convergence discrete(const Carrier& c);
  static Convergence chaotic(const Carrier& c);
  /// Pretopology whose vicinity kernel at atom i is vicinity[i] (must contain i):
  /// lim K↑ = {x : K ⊆ vicinity[x]}.
  static Convergence from_vicinities(const Carrier& c, const std::vector<Subset>& vicinity);

  bool operator==(const Convergence& o) const { return carrier_ == o.carrier_ && table_ == o.table_; }

 private:
  Carrier carrier_;
  std::vector<Subset> table_;
};

/// The first violated axiom with witness kernels.
struct AxiomViolation {
  enum class Kind { missing_row, duplicate_row, outside_carrier, point_axiom, monotonicity };
  Kind kind;
  Subset kernel;        // offending kernel (K)
  Subset wider_kernel;  // K′ ⊋ K for monotonicity witnesses
  std::size_t atom = 0; // atom for point-axiom witnesses
  std::string message;
};

const char* to_string(AxiomViolation::Kind k);

using ValidationResult = std::variant<Convergence, AxiomViolation>;

/// Checks a candidate table given as (kernel, limit-set) rows.
ValidationResult validate(const Carrier& carrier, std::span<const std::pair<Subset, Subset>> rows);
/// Checks a candidate table indexed by kernel bits (table[0] ignored).
std::optional<AxiomViolation> check_axioms(const Carrier& carrier, const std::vector<Subset>& table);

/// Pointwise intersection of limit tables: the supremum ⋁Ξ.
Convergence sup(std::span<const Convergence> xs);
/// Pointwise union: the infimum ⋀Ξ.
Convergence inf(std::span<const Convergence> xs);
Convergence sup(const Convergence& a, const Convergence& b);
Convergence inf(const Convergence& a, const Convergence& b);

/// ζ ≥ ξ: every ζ-limit is a ξ-limit.
bool is_finer(const Convergence& zeta, const Convergence& xi);

/// A function between carriers with the convergences it is judged against.
class SpaceMap {
 public:
  SpaceMap(Convergence domain, Convergence codomain, AtomMap f);
  SpaceMap(Convergence domain, Convergence codomain, std::vector<std::size_t> assignment);

  const Convergence& domain() const { return domain_; }
  const Convergence& codomain() const { return codomain_; }
  const AtomMap& map() const { return f_; }
  bool is_surjective() const { return f_.is_surjective(); }

 private:
  Convergence domain_;
  Convergence codomain_;
  AtomMap f_;
};

/// x ∈ lim_ξ K implies f(x) ∈ lim_τ f(K), for every kernel K.
bool is_continuous(const AtomMap& f, const Convergence& xi, const Convergence& tau);
bool is_continuous(const SpaceMap& m);

/// f⁻τ: lim K = f⁻(lim_τ f(K)).
Convergence initial(const AtomMap& f, const Convergence& tau);
/// fξ: the finest convergence on the codomain making f continuous.
Convergence final(const AtomMap& f, const Convergence& xi);

/// Cartesian product carrier with atoms named "(x,y)", index i*|Y| + j.
Carrier product_carrier(const Carrier& x, const Carrier& y);
AtomMap projection_first(const Carrier& x, const Carrier& y);
AtomMap projection_second(const Carrier& x, const Carrier& y);

/// ξ × τ with lim P = lim_ξ p₁(P) × lim_τ p₂(P). Throws BoundExceeded when
/// the product carrier exceeds bounds.max_product.
Convergence product(const Convergence& xi, const Convergence& tau, const Bounds& bounds = {});
/// Left fold of binary products.
Convergence product(std::span<const Convergence> xs, const Bounds& bounds = {});

/// lim K₀ ∩ lim K₁ ⊆ lim (K₀ ∪ K₁) for every pair of kernels.
bool is_finitely_deep(const Convergence& xi);

}  // namespace convlab
