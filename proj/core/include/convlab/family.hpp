#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convlab/error.hpp"

namespace convlab {

/// Hard structural limit on atoms in any carrier whose tables are
/// materialized (a limit table has 2^n rows).
inline constexpr std::size_t kMaxAtoms = 16;

/// A set of atoms, stored as a bit pattern indexed by atom order.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset atom(std::size_t i) { return Subset(Bits{1} << i); }
  static constexpr Subset first(std::size_t n) {
    return Subset(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool meets(Subset o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  /// Index of the lowest atom; precondition: non-empty.
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Calls fn(index) for each member, ascending.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (Bits b = bits_; b != 0; b &= b - 1) fn(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  Bits bits_ = 0;
};

/// Named finite ground set. Cheap to copy; equality compares names.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names);

  /// Carrier with atoms named "0", "1", ... or from a prefix ("a","b",...).
  static Carrier numbered(std::size_t n);
  static Carrier lettered(std::size_t n);

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Subset full() const { return Subset::first(size()); }
  /// Number of rows of a table indexed by subsets (2^n).
  std::size_t powerset_size() const { return std::size_t{1} << size(); }

  /// Subset from atom names; throws InputError on unknown names.
  Subset subset(const std::vector<std::string>& members) const;
  std::vector<std::string> names_of(Subset s) const;
  /// "{a,b}" rendering used by reports and diagnostics.
  std::string format(Subset s) const;

  bool operator==(const Carrier& o) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

void require_same_carrier(const Carrier& a, const Carrier& b, const char* where);

/// Total function between carriers, given by atom indices.
class AtomMap {
 public:
  AtomMap(Carrier domain, Carrier codomain, std::vector<std::size_t> assignment);

  static AtomMap identity(const Carrier& c);
  /// Same index assignment onto a carrier of equal size (relabeling).
  static AtomMap relabel(const Carrier& from, const Carrier& to);

  const Carrier& domain() const { return domain_; }
  const Carrier& codomain() const { return codomain_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  bool is_surjective() const;
  bool is_injective() const;

  bool operator==(const AtomMap&) const = default;

 private:
  Carrier domain_;
  Carrier codomain_;
  std::vector<std::size_t> assignment_;
};

/// Every map from a carrier of size n into one of size k, in mixed-radix
/// order with atom 0 most significant.
std::vector<AtomMap> all_maps(const Carrier& domain, const Carrier& codomain);

enum class FamilyKind { raw, isotone, filter, ideal, grill_of };

const char* to_string(FamilyKind k);

/// A set of subsets of a carrier held in full extension (sorted, unique).
/// The kind tag records a structural guarantee checked on construction.
class SubsetFamily {
 public:
  SubsetFamily(Carrier carrier, std::vector<Subset> sets, FamilyKind kind = FamilyKind::raw);

  static SubsetFamily empty(const Carrier& c);
  /// All subsets of the carrier (the improper filter, kernel ∅).
  static SubsetFamily powerset(const Carrier& c);
  /// K↑; kernel ∅ gives the improper filter 2^X.
  static SubsetFamily principal_filter(const Carrier& c, Subset kernel);
  /// ↓D, the principal ideal of subsets of D.
  static SubsetFamily principal_ideal(const Carrier& c, Subset top);
  static SubsetFamily isotone_closure(const SubsetFamily& f);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Subset>& sets() const { return sets_; }
  FamilyKind kind() const { return kind_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Subset s) const;

  bool is_isotone() const;
  bool is_filter() const;
  bool is_ideal() const;

  bool operator==(const SubsetFamily& o) const {
    return carrier_ == o.carrier_ && sets_ == o.sets_;
  }

 private:
  Carrier carrier_;
  std::vector<Subset> sets_;
  FamilyKind kind_;
};

/// Proper filter on a finite carrier, represented by its kernel.
class FilterKernel {
 public:
  FilterKernel(Carrier carrier, Subset kernel);

  const Carrier& carrier() const { return carrier_; }
  Subset kernel() const { return kernel_; }
  SubsetFamily family() const { return SubsetFamily::principal_filter(carrier_, kernel_); }

  /// F ≥ D (F finer) iff βF ⊆ βD iff kernel(F) ⊆ kernel(D).
  bool is_finer_than(const FilterKernel& d) const;

  bool operator==(const FilterKernel&) const = default;

 private:
  Carrier carrier_;
  Subset kernel_;
};

/// Sets meeting every member of the family. The empty family has every
/// subset in its grill (intersection over an empty index).
SubsetFamily grill(const SubsetFamily& family);

/// Every member of a meets every member of b.
bool mesh(const SubsetFamily& a, const SubsetFamily& b);

/// {X ∖ P : P ∈ family}; ideals and filters are exchanged.
SubsetFamily complements(const SubsetFamily& family);

/// Atoms x whose principal ultrafilter x↑ refines K↑.
std::vector<std::size_t> finer_ultrafilters(const FilterKernel& f);

/// Memberwise image f[A] = {f(A) : A ∈ A}.
SubsetFamily image_family(const AtomMap& f, const SubsetFamily& a);
/// Memberwise preimage f⁻[B] = {f⁻(B) : B ∈ B}.
SubsetFamily preimage_family(const AtomMap& f, const SubsetFamily& b);

/// All nonempty subsets of a carrier in ascending bit order.
std::vector<Subset> nonempty_subsets(const Carrier& c);

}  // namespace convlab
