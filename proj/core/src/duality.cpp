#include "convlab/duality.hpp"

#include <algorithm>
#include <cstdint>

#include "convlab/fixtures.hpp"

namespace convlab {

Carrier FunctionSpace::carrier() const {
  std::vector<std::string> names;
  names.reserve(functions.size());
  for (const auto& f : functions) {
    std::string s = "<";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ',';
      s += dualizer.carrier().name(f[i]);
    }
    names.push_back(s + ">");
  }
  return Carrier(std::move(names));
}

std::optional<std::size_t> FunctionSpace::index_of(const std::vector<std::size_t>& values) const {
  auto it = std::find(functions.begin(), functions.end(), values);
  if (it == functions.end()) return std::nullopt;
  return static_cast<std::size_t>(it - functions.begin());
}

namespace {

bool continuous_values(const std::vector<std::size_t>& f, const Convergence& xi, const Convergence& sigma) {
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    Subset img, lim_img;
    Subset(k).for_each([&](std::size_t x) { img |= Subset::atom(f[x]); });
    xi.table()[k].for_each([&](std::size_t x) { lim_img |= Subset::atom(f[x]); });
    if (!lim_img.is_subset_of(sigma.lim(img))) return false;
  }
  return true;
}

// Shared machinery for dual limits over kernels G ⊆ C(ξ,σ), iterated in
// ascending bit order so that value sets can be built incrementally.
class DualSweep {
 public:
  explicit DualSweep(const FunctionSpace& space) : space_(space) {
    const std::size_t n = space.domain.size();
    const std::size_t m = space.size();
    const std::size_t sigma_subsets = space.dualizer.carrier().powerset_size();
    if (space.dualizer.size() > 8) throw BoundExceeded("dualizer carriers above 8 atoms are not supported");
    fun_in_.assign(n, std::vector<Subset::Bits>(sigma_subsets, 0));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t s = 0; s < sigma_subsets; ++s) {
        Subset::Bits mask = 0;
        for (std::size_t f = 0; f < m; ++f) {
          if ((s >> space.functions[f][y]) & 1U) mask |= Subset::Bits{1} << f;
        }
        fun_in_[y][s] = mask;
      }
    }
    for (Subset::Bits k = 1; k < space.domain.table().size(); ++k) {
      space.domain.table()[k].for_each([&](std::size_t y) { constraints_.push_back({Subset(k), y}); });
    }
    vals_.assign(n, std::vector<std::uint8_t>(std::size_t{1} << m, 0));
  }

  /// Must be called for g = 1, 2, 3, ... in order.
  void advance(Subset::Bits g) {
    const Subset::Bits rest = g & (g - 1);
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(g));
    for (std::size_t y = 0; y < vals_.size(); ++y) {
      vals_[y][g] = static_cast<std::uint8_t>(vals_[y][rest] | (1U << space_.functions[low][y]));
    }
    current_ = g;
  }

  /// {g(y) : y ∈ K, g ∈ current G}.
  Subset evaluation(Subset k) const {
    std::uint8_t v = 0;
    k.for_each([&](std::size_t y) { v |= vals_[y][current_]; });
    return Subset(v);
  }

  /// lim_[ξ,σ] of the current G.
  Subset::Bits dual_limit() const {
    Subset::Bits lim = Subset::first(space_.size()).bits();
    for (const auto& c : constraints_) {
      lim &= fun_in_[c.y][space_.dualizer.lim(evaluation(c.kernel)).bits()];
      if (lim == 0) break;
    }
    return lim;
  }

  Subset::Bits functions_with_value_in(std::size_t y, Subset s) const { return fun_in_[y][s.bits()]; }

 private:
  struct Constraint {
    Subset kernel;
    std::size_t y;
  };
  const FunctionSpace& space_;
  std::vector<std::vector<Subset::Bits>> fun_in_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::uint8_t>> vals_;
  Subset::Bits current_ = 0;
};

}  // namespace

FunctionSpace function_space(const Convergence& xi, const Convergence& sigma, const Bounds& bounds,
                             std::size_t max_functions) {
  if (max_functions == 0) max_functions = bounds.max_functions;
  const std::size_t n = xi.size();
  const std::size_t k = sigma.size();
  double candidates = 1;
  for (std::size_t i = 0; i < n; ++i) candidates *= static_cast<double>(k);
  if (candidates > static_cast<double>(bounds.max_function_candidates)) {
    throw BoundExceeded("function space scan of " + std::to_string(static_cast<long long>(candidates)) +
                        " candidate maps exceeds bound");
  }
  FunctionSpace space{xi, sigma, {}};
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    if (continuous_values(digits, xi, sigma)) {
      space.functions.push_back(digits);
      if (space.functions.size() > max_functions) {
        throw BoundExceeded("function space exceeds " + std::to_string(max_functions) + " functions");
      }
    }
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < k) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  return space;
}

DualConvergence dual(const FunctionSpace& space) {
  const std::size_t m = space.size();
  if (m > kMaxAtoms) throw BoundExceeded("dual table over more than 16 functions is not materialized");
  DualSweep sweep(space);
  std::vector<Subset> table(std::size_t{1} << m);
  for (Subset::Bits g = 1; g < table.size(); ++g) {
    sweep.advance(g);
    table[g] = Subset(sweep.dual_limit());
  }
  return {space, Convergence(space.carrier(), std::move(table))};
}

DualConvergence dual(const Convergence& xi, const Convergence& sigma, const Bounds& bounds) {
  return dual(function_space(xi, sigma, bounds));
}

bool duality_inequality_holds(const FunctionSpace& space, const Convergence& theta) {
  const std::size_t m = space.size();
  if (theta.size() != m) throw CarrierMismatch("theta must live on the function space");
  const auto& xi = space.domain;
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    const Subset lim_x = xi.table()[k];
    if (lim_x.empty()) continue;
    for (Subset::Bits g = 1; g < theta.table().size(); ++g) {
      Subset ev;
      Subset(k).for_each([&](std::size_t y) {
        Subset(g).for_each([&](std::size_t f) { ev |= Subset::atom(space.functions[f][y]); });
      });
      const Subset allowed = space.dualizer.lim(ev);
      bool ok = true;
      lim_x.for_each([&](std::size_t y) {
        theta.table()[g].for_each([&](std::size_t f) { ok = ok && allowed.contains(space.functions[f][y]); });
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool duality_inequality_streaming(const FunctionSpace& space, const Bounds& bounds) {
  const std::size_t m = space.size();
  if (m > bounds.max_epi_functions || m > 30) {
    throw BoundExceeded("streaming dual check over " + std::to_string(m) + " functions exceeds bound");
  }
  const auto& xi = space.domain;
  DualSweep sweep(space);
  const Subset::Bits limit = Subset::Bits{1} << m;
  for (Subset::Bits g = 1; g < limit; ++g) {
    sweep.advance(g);
    const Subset::Bits dl = sweep.dual_limit();
    if (dl == 0) continue;
    for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
      if (xi.table()[k].empty()) continue;
      Subset ev;
      Subset(g).for_each([&](std::size_t f) {
        Subset(k).for_each([&](std::size_t y) { ev |= Subset::atom(space.functions[f][y]); });
      });
      const Subset ok_values = space.dualizer.lim(ev);
      bool ok = true;
      Subset(dl).for_each([&](std::size_t f) {
        xi.table()[k].for_each([&](std::size_t y) { ok = ok && ok_values.contains(space.functions[f][y]); });
      });
      if (!ok) return false;
    }
  }
  return true;
}

AtomMap evaluation_map(const FunctionSpace& space, const Carrier& product_carrier) {
  const std::size_t n = space.domain.size();
  const std::size_t m = space.size();
  std::vector<std::size_t> a(n * m);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t f = 0; f < m; ++f) a[y * m + f] = space.functions[f][y];
  return AtomMap(product_carrier, space.dualizer.carrier(), std::move(a));
}

namespace {

Convergence epi_streaming(const FunctionSpace& space) {
  const auto& xi = space.domain;
  const std::size_t m = space.size();
  DualSweep sweep(space);
  std::vector<Subset> lim(xi.table().size(), xi.carrier().full());
  lim[0] = Subset{};
  const Subset::Bits limit = Subset::Bits{1} << m;
  for (Subset::Bits g = 1; g < limit; ++g) {
    sweep.advance(g);
    const Subset::Bits dl = sweep.dual_limit();
    if (dl == 0) continue;
    for (Subset::Bits k = 1; k < lim.size(); ++k) {
      if (lim[k].empty()) continue;
      const Subset allowed = space.dualizer.lim(sweep.evaluation(Subset(k)));
      Subset keep;
      lim[k].for_each([&](std::size_t x) {
        if ((dl & ~sweep.functions_with_value_in(x, allowed)) == 0) keep |= Subset::atom(x);
      });
      lim[k] = keep;
    }
  }
  return Convergence(xi.carrier(), std::move(lim));
}

}  // namespace

EpiResult bidual_and_epi(const Convergence& xi, const Convergence& sigma, const Bounds& bounds) {
  FunctionSpace first = function_space(xi, sigma, bounds, bounds.max_epi_functions);
  Convergence streamed = epi_streaming(first);
  EpiResult r{first, std::nullopt, {}, false, false, streamed};
  r.j_continuous = is_finer(xi, streamed);

  // j(x) as a value vector over the first dual.
  std::vector<std::vector<std::size_t>> j_values(xi.size());
  for (std::size_t x = 0; x < xi.size(); ++x) {
    for (const auto& f : first.functions) j_values[x].push_back(f[x]);
  }
  std::vector<std::vector<std::size_t>> distinct = j_values;
  std::sort(distinct.begin(), distinct.end());
  r.j_injective = std::unique(distinct.begin(), distinct.end()) == distinct.end();

  double candidates = 1;
  for (std::size_t i = 0; i < first.size(); ++i) candidates *= static_cast<double>(sigma.size());
  if (first.size() <= bounds.max_functions && candidates <= static_cast<double>(bounds.max_function_candidates)) {
    const DualConvergence d = dual(first);
    std::optional<FunctionSpace> maybe_second;
    try {
      maybe_second = function_space(d.table, sigma, bounds, kMaxAtoms);
    } catch (const BoundExceeded&) {
      return r;
    }
    const FunctionSpace& second = *maybe_second;
    r.bidual = dual(second);
    for (std::size_t x = 0; x < xi.size(); ++x) {
      auto idx = second.index_of(j_values[x]);
      if (!idx) throw InvariantViolation("evaluation at " + xi.carrier().name(x) + " is not continuous on the dual");
      r.j_indices.push_back(*idx);
    }
    const AtomMap j(xi.carrier(), r.bidual->table.carrier(), r.j_indices);
    const Convergence materialized = initial(j, r.bidual->table);
    if (!(materialized == streamed)) {
      throw InvariantViolation("streamed and materialized exponential hulls disagree");
    }
  }
  return r;
}

Convergence epi(const Convergence& xi, const Convergence& sigma, const Bounds& bounds) {
  return epi_streaming(function_space(xi, sigma, bounds, bounds.max_epi_functions));
}

Functor epi_functor(FunctorTag tag, const Bounds& bounds) {
  if (tag == FunctorTag::EpiSier) {
    return Functor{tag, "EpiSier", [bounds](const Convergence& xi) { return epi(xi, fixtures::sierpinski(), bounds); }};
  }
  if (tag == FunctorTag::EpiBour) {
    return Functor{tag, "EpiBour", [bounds](const Convergence& xi) { return epi(xi, fixtures::bourdaud(), bounds); }};
  }
  throw InputError(std::string("not an Epi functor: ") + to_string(tag));
}

Functor any_functor(FunctorTag tag, const Bounds& bounds) {
  if (tag == FunctorTag::EpiSier || tag == FunctorTag::EpiBour) return epi_functor(tag, bounds);
  return functor(tag);
}

std::size_t ExponentialityReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CommutationResult& c) { return !c.commutes; }));
}

ExponentialityReport exponentiality_check(const Functor& j,
                                          const std::vector<std::pair<Convergence, Convergence>>& pairs,
                                          const Bounds& bounds) {
  ExponentialityReport r{j.name, false, {}};
  r.asserted = j.tag == FunctorTag::I || j.tag == FunctorTag::S || j.tag == FunctorTag::A_F;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const bool ok = j(product(a, b, bounds)) == product(j(a), j(b), bounds);
    r.results.push_back({i, ok});
  }
  return r;
}

std::vector<Subset> hyperspace_fibers(const Convergence& tau, std::size_t value) {
  const Convergence sier = fixtures::sierpinski();
  std::vector<Subset> out;
  for (Subset::Bits a = 0; a < tau.carrier().powerset_size(); ++a) {
    std::vector<std::size_t> h(tau.size());
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = Subset(a).contains(x) ? value : 1 - value;
    if (is_continuous(AtomMap(tau.carrier(), sier.carrier(), h), tau, sier)) out.emplace_back(a);
  }
  return out;
}

HyperspaceOrientation hyperspace_orientation(const Convergence& tau, const Bounds& bounds) {
  HyperspaceOrientation o;
  Bounds b = bounds;
  b.max_functions = std::max<std::size_t>(b.max_functions, tau.carrier().powerset_size());
  o.functions = function_space(tau, fixtures::sierpinski(), b).size();
  std::vector<Subset> open, closed;
  for (Subset::Bits a = 0; a < tau.carrier().powerset_size(); ++a) {
    if (is_open(tau, Subset(a))) open.emplace_back(a);
    if (is_closed(tau, Subset(a))) closed.emplace_back(a);
  }
  o.open_sets = open.size();
  o.closed_sets = closed.size();
  const auto fibers = hyperspace_fibers(tau, 1);
  o.value1_fibers_are_open = fibers == open;
  o.value1_fibers_are_closed = fibers == closed;
  return o;
}

}  // namespace convlab
