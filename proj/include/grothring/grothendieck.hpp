#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "grothring/monoid.hpp"
#include "grothring/smith.hpp"

namespace grothring {

/// The class [a, b] of the pair (a, b). Equality is semantic and goes through
/// GrothendieckGroup::eq; the defaulted operators below are structural only.
struct GrothElement {
  MonoidValue first;
  MonoidValue second;

  friend auto operator<=>(const GrothElement&, const GrothElement&) = default;
  friend bool operator==(const GrothElement&, const GrothElement&) = default;
};

std::string to_string(const GrothElement& x);

enum class EqStrategy { CancellativeCrossSum, FiniteWitness, PresentationLattice };

const char* to_string(EqStrategy s) noexcept;

/// ℤʳ ⊕ ℤ/d₁ ⊕ ... ⊕ ℤ/dₙ with d₁ | ... | dₙ and every dᵢ ≥ 2.
struct FGAbelianStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  /// Group order, or nullopt when infinite.
  std::optional<mpz_class> order() const;
  friend bool operator==(const FGAbelianStructure&, const FGAbelianStructure&) = default;
};

std::string to_string(const FGAbelianStructure& s);

bool is_torsion_free(const FGAbelianStructure& s) noexcept;

/// Invariant-factor form of a direct sum of structures.
FGAbelianStructure direct_sum_groth(const std::vector<FGAbelianStructure>& components);

/// The abelian group ℤᵏ / (row lattice of a relation matrix), with the Smith
/// change of basis that exposes its cyclic decomposition. Coordinates of
/// x ∈ ℤᵏ are x·V; slot j is torsion (mod dⱼ) when dⱼ > 1, trivial when
/// dⱼ = 1, and free when j ≥ rank.
class PresentedGroup {
 public:
  PresentedGroup(std::size_t generators, const std::vector<std::vector<mpz_class>>& relation_rows);

  std::size_t generators() const noexcept { return generators_; }
  const SNFResult& snf() const noexcept { return snf_; }
  FGAbelianStructure structure() const;

  /// Free coordinates of x, in slot order.
  std::vector<mpz_class> free_coordinates(const std::vector<mpz_class>& x) const;
  /// Torsion coordinates of x reduced into [0, dⱼ).
  std::vector<mpz_class> torsion_coordinates(const std::vector<mpz_class>& x) const;
  /// True iff x is in the relation lattice, i.e. is zero in the group.
  bool is_zero(const std::vector<mpz_class>& x) const;
  /// Generator vector of the j-th free (or torsion) basis element.
  std::vector<mpz_class> free_basis_vector(std::size_t j) const;
  std::vector<mpz_class> torsion_basis_vector(std::size_t j) const;
  const std::vector<std::size_t>& free_slots() const noexcept { return free_slots_; }
  const std::vector<std::size_t>& torsion_slots() const noexcept { return torsion_slots_; }

 private:
  std::size_t generators_;
  SNFResult snf_;
  std::vector<std::size_t> free_slots_;
  std::vector<std::size_t> torsion_slots_;
};

/// A presented model of G(M): the abelian presentation plus the maps between
/// monoid values and generator vectors. Available for every family.
struct PresentedModel {
  Monoid monoid;
  std::shared_ptr<const PresentedGroup> group;
  /// Image in ℤᵏ of a monoid value.
  std::function<std::vector<mpz_class>(const MonoidValue&)> embed;
  /// Some pair [a, b] whose class is the given generator vector.
  std::function<GrothElement(const std::vector<mpz_class>&)> realize;

  std::vector<mpz_class> embed_class(const GrothElement& x) const;
};

/// Generators are the exponent slots (free, lattice, presentation) or the
/// elements (finite monoids); a finite table contributes rows
/// e_a + e_b - e_{a+b} and e_0. Direct sums are block diagonal.
PresentedModel presented_model(const Monoid& m);

/// Structure of G(M) for any supported monoid (via presented_model).
FGAbelianStructure groth_structure(const Monoid& m);

/// G(P) for a presented monoid P: relation rows u - v, structure via SNF.
FGAbelianStructure groth_of_presentation(const Monoid& presentation);

class GrothendieckGroup {
 public:
  /// Picks cross-sum for cancellative bases, witness enumeration for finite
  /// ones and lattice membership for presentations; otherwise throws
  /// StrategyUnavailable.
  explicit GrothendieckGroup(Monoid base);
  /// Forces a strategy; throws StrategyUnavailable when it does not apply.
  GrothendieckGroup(Monoid base, EqStrategy strategy);

  const Monoid& base() const noexcept { return base_; }
  EqStrategy strategy() const noexcept { return strategy_; }

  bool eq(const GrothElement& x, const GrothElement& y) const;
  /// Some m with (a+d)+m = (b+c)+m. For presentations returns nullopt even
  /// when eq holds (membership is certified by the lattice instead).
  std::optional<MonoidValue> witness(const GrothElement& x, const GrothElement& y) const;

  GrothElement zero() const;
  GrothElement add(const GrothElement& x, const GrothElement& y) const;
  GrothElement neg(const GrothElement& x) const;
  GrothElement sub(const GrothElement& x, const GrothElement& y) const;
  GrothElement multiple(const GrothElement& x, std::uint64_t n) const;
  GrothElement canonical(const MonoidValue& m) const;
  bool is_zero(const GrothElement& x) const { return eq(x, zero()); }
  void check(const GrothElement& x) const;

  /// A representative with the common part removed (free and lattice bases,
  /// and direct sums of them); other families return x unchanged.
  GrothElement reduced(const GrothElement& x) const;

  /// m with [m, 0] = x, when x lies in the canonical image.
  std::optional<MonoidValue> canonical_preimage(const GrothElement& x) const;

  const PresentedModel* model() const noexcept { return model_.get(); }

 private:
  Monoid base_;
  EqStrategy strategy_;
  std::vector<MonoidValue> elements_;  // finite strategy only
  std::shared_ptr<const PresentedModel> model_;  // presentation strategy only
};

/// Is m ↦ [m, 0] injective? Exhaustive for finite bases, by cancellativity
/// for free/lattice bases and sums of them.
bool canonical_map_injective(const GrothendieckGroup& g);

/// Class representatives of G(M) for a finite base, with a lookup.
class FiniteGrothClasses {
 public:
  explicit FiniteGrothClasses(const GrothendieckGroup& g);

  const std::vector<GrothElement>& representatives() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t index_of(const GrothElement& x) const;

 private:
  const GrothendieckGroup* group_;
  std::vector<GrothElement> reps_;
};

/// h([a,b]) = g(a) - g(b) for a monoid morphism g: M → H, H a finite abelian
/// group given as a Cayley monoid.
class UniversalExtension {
 public:
  using MonoidMap = std::function<MonoidValue(const MonoidValue&)>;

  /// Verifies g exhaustively on finite bases and on `samples` random pairs
  /// otherwise; throws InvalidInput when g is not a morphism.
  UniversalExtension(GrothendieckGroup g, Monoid target, MonoidMap map,
                     std::size_t samples = 1000, std::uint64_t seed = 0);

  MonoidValue operator()(const GrothElement& x) const;
  const Monoid& target() const noexcept { return target_; }

 private:
  GrothendieckGroup group_;
  Monoid target_;
  MonoidMap map_;
  std::vector<std::size_t> inverse_;
};

using GrothComparator =
    std::function<std::strong_ordering(const GrothElement&, const GrothElement&)>;

/// [a,b] < [c,d] iff a + d < b + c. Base must be cancellative (Precondition).
GrothComparator order_from_monoid_order(const GrothendieckGroup& g, Comparator monoid_order);

struct TorsionWitness {
  GrothElement element;
  std::vector<mpz_class> generator_vector;
  /// Free coordinates followed by torsion coordinates.
  std::vector<mpz_class> coordinates;
  /// Least n ≥ 2 with n·element = 0.
  mpz_class order;
};

class TorsionError : public AlgebraError {
 public:
  explicit TorsionError(TorsionWitness w);
  const TorsionWitness& witness() const noexcept { return witness_; }

 private:
  TorsionWitness witness_;
};

/// Lexicographic order on G ≅ ℤʳ, transported through the Smith basis. Each
/// free axis is oriented so that the first generator with a nonzero
/// coordinate on it is positive.
class TotalOrder {
 public:
  explicit TotalOrder(std::shared_ptr<const PresentedModel> model);

  std::size_t rank() const noexcept { return signs_.size(); }
  std::vector<mpz_class> coordinates(const GrothElement& x) const;
  std::vector<mpz_class> coordinates(const std::vector<mpz_class>& generator_vector) const;
  std::strong_ordering compare(const GrothElement& x, const GrothElement& y) const;
  /// Monoid order m < m' iff [m,0] < [m',0].
  std::strong_ordering compare_monoid(const MonoidValue& a, const MonoidValue& b) const;
  /// Coordinates of each generator of the presentation (the certificate).
  std::vector<std::vector<mpz_class>> generator_images() const;
  /// A pair representing the coordinate vector c ∈ ℤʳ.
  GrothElement from_coordinates(const std::vector<mpz_class>& c) const;
  const PresentedModel& model() const noexcept { return *model_; }

 private:
  std::shared_ptr<const PresentedModel> model_;
  std::vector<int> signs_;
};

/// Throws TorsionError (smallest torsion slot, order dⱼ) when G has torsion.
TotalOrder build_total_order(std::shared_ptr<const PresentedModel> model);
TotalOrder build_total_order(const Monoid& m);

/// Exhaustive totality, transitivity and strict compatibility of `order` on
/// the elements of G whose coordinates lie in [-radius, radius]^rank. The
/// elements are realized as pairs and every sum is re-coordinatized through
/// the order itself.
OrderCheck check_total_order(const TotalOrder& order, std::int64_t radius);

}  // namespace grothring
