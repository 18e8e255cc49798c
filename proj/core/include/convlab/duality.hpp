#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convlab/reflectors.hpp"

namespace convlab {

/// C(ξ,σ): every continuous atom map, enumerated completely. Functions are
/// value vectors indexed by domain atoms and form a carrier of their own,
/// with atom names like "<0,1>".
struct FunctionSpace {
  Convergence domain;
  Convergence dualizer;
  std::vector<std::vector<std::size_t>> functions;

  std::size_t size() const { return functions.size(); }
  Carrier carrier() const;
  /// Index of a value vector, if it is a member.
  std::optional<std::size_t> index_of(const std::vector<std::size_t>& values) const;
};

/// Throws BoundExceeded if the candidate count or |C| exceeds the bounds.
FunctionSpace function_space(const Convergence& xi, const Convergence& sigma, const Bounds& bounds = {},
                             std::size_t max_functions = 0);

struct DualConvergence {
  FunctionSpace space;
  Convergence table;  // on space.carrier()
};

/// [ξ,σ]: f ∈ lim G iff for every kernel K and x ∈ lim_ξ K,
/// f(x) ∈ lim_σ {g(y) : y ∈ K, g ∈ G}.
DualConvergence dual(const Convergence& xi, const Convergence& sigma, const Bounds& bounds = {});
DualConvergence dual(const FunctionSpace& space);

/// ξ × θ ≥ ev⁻σ for a convergence θ on C(ξ,σ). Checked on rectangle
/// kernels K × G, which suffices because ev(P) ⊆ ev(p₁P × p₂P).
bool duality_inequality_holds(const FunctionSpace& space, const Convergence& theta);

/// The same inequality for the dual itself when its table is too large to
/// hold: streams over every kernel G of C(ξ,σ) and checks the dual limit of
/// G against evaluation sets rebuilt directly from G's members. Throws
/// BoundExceeded above bounds.max_epi_functions.
bool duality_inequality_streaming(const FunctionSpace& space, const Bounds& bounds = {});

/// The evaluation map X × C(ξ,σ) → Y, for materialized cross-checks.
AtomMap evaluation_map(const FunctionSpace& space, const Carrier& product_carrier);

struct EpiResult {
  FunctionSpace first_dual;
  /// [[ξ,σ],σ] when its function space fits the bounds; otherwise the
  /// bidual is evaluated only along j(X).
  std::optional<DualConvergence> bidual;
  /// Index of j(x) in the bidual function space (when materialized).
  std::vector<std::size_t> j_indices;
  bool j_injective = false;
  /// j ∈ C(ξ, [[ξ,σ],σ]), i.e. ξ ≥ Epi^σ ξ.
  bool j_continuous = false;
  /// j⁻[[ξ,σ],σ].
  Convergence epi;
};

/// Epi^σ ξ = j⁻[[ξ,σ],σ] with j(x) = (f ↦ f(x)).
///
/// The bidual limit at j(K) only involves the functions j(x), so the hull is
/// computed by streaming over all kernels of the first dual without
/// enumerating C([ξ,σ],σ):
///   x ∈ lim_Epi K  iff  for every kernel G of C(ξ,σ) and f ∈ lim_[ξ,σ] G,
///                       f(x) ∈ lim_σ {g(y) : y ∈ K, g ∈ G}.
/// When the bidual function space is small enough it is materialized too
/// and the two routes must agree (InvariantViolation otherwise).
EpiResult bidual_and_epi(const Convergence& xi, const Convergence& sigma, const Bounds& bounds = {});

/// Epi^σ ξ by the streaming route only.
Convergence epi(const Convergence& xi, const Convergence& sigma, const Bounds& bounds = {});

/// Epi^$ (EpiSier) or Epi^¥ (EpiBour) as a Functor.
Functor epi_functor(FunctorTag tag, const Bounds& bounds = {});
/// Any tag, including the Epi ones.
Functor any_functor(FunctorTag tag, const Bounds& bounds = {});

struct CommutationResult {
  std::size_t pair_index;
  bool commutes;
};

struct ExponentialityReport {
  std::string functor;
  bool asserted = false;  // only S is asserted; others run in search mode
  std::vector<CommutationResult> results;
  std::size_t failures() const;
  bool ok() const { return !asserted || failures() == 0; }
};

/// J(ξ×τ) = Jξ × Jτ for each pair.
ExponentialityReport exponentiality_check(
    const Functor& j, const std::vector<std::pair<Convergence, Convergence>>& pairs, const Bounds& bounds = {});

/// Sets A whose indicator (value `value` on A, the other value elsewhere)
/// is continuous τ → $. Value 1 gives the open sets of a topology τ.
std::vector<Subset> hyperspace_fibers(const Convergence& tau, std::size_t value);

struct HyperspaceOrientation {
  std::size_t functions = 0;       // |C(τ,$)|
  std::size_t open_sets = 0;
  std::size_t closed_sets = 0;
  bool value1_fibers_are_open = false;
  bool value1_fibers_are_closed = false;
};

HyperspaceOrientation hyperspace_orientation(const Convergence& tau, const Bounds& bounds = {});

}  // namespace convlab
