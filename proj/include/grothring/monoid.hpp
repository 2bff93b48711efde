#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grothring/errors.hpp"
#include "grothring/rng.hpp"

namespace grothring {

/// An element of some commutative monoid. What the parts mean depends on the
/// family: a single table index for Cayley monoids, an exponent vector for
/// free, lattice and presented monoids, and the concatenation of the
/// component encodings for direct sums.
struct MonoidValue {
  std::vector<std::int64_t> parts;

  MonoidValue() = default;
  explicit MonoidValue(std::vector<std::int64_t> p) : parts(std::move(p)) {}
  MonoidValue(std::initializer_list<std::int64_t> p) : parts(p) {}

  std::size_t size() const noexcept { return parts.size(); }
  std::int64_t operator[](std::size_t i) const { return parts[i]; }

  friend auto operator<=>(const MonoidValue&, const MonoidValue&) = default;
  friend bool operator==(const MonoidValue&, const MonoidValue&) = default;
};

std::string to_string(const MonoidValue& v);

enum class MonoidKind { Cayley, Free, Lattice, Presentation, DirectSum };

const char* to_string(MonoidKind kind) noexcept;

/// One defining relation u = v of a presented monoid, both sides exponent
/// vectors over the generators.
struct Relation {
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
};

/// Raised by Cayley table validation; carries the offending triple (the
/// third entry is unused for commutativity and identity failures).
class AxiomViolationError : public AlgebraError {
 public:
  AxiomViolationError(std::string axiom, std::array<std::size_t, 3> triple);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::string axiom_;
  std::array<std::size_t, 3> triple_;
};

namespace detail {
struct MonoidData;
}

/// A commutative monoid from one of the supported families. Values are
/// immutable and cheap to copy (shared representation).
///
/// Presented monoids only carry their presentation: the operation acts on
/// exponent representatives, but element equality is not decided here.
class Monoid {
 public:
  /// Validates commutativity, associativity and the identity law eagerly;
  /// throws AxiomViolationError on the first failure.
  static Monoid cayley(std::vector<std::vector<std::size_t>> table, std::size_t identity);
  /// ℕᵏ under componentwise addition.
  static Monoid free(std::size_t rank);
  /// ℤʳ under componentwise addition.
  static Monoid lattice(std::size_t rank);
  static Monoid presentation(std::size_t generators, std::vector<Relation> relations);
  static Monoid direct_sum(std::vector<Monoid> components);

  MonoidKind kind() const noexcept;
  /// Length of every MonoidValue of this monoid.
  std::size_t width() const noexcept;

  MonoidValue identity() const;
  MonoidValue op(const MonoidValue& a, const MonoidValue& b) const;
  /// n·a, with 0·a the identity.
  MonoidValue multiple(const MonoidValue& a, std::uint64_t n) const;

  /// Throws MalformedElement when v is not an element.
  void check(const MonoidValue& v) const;
  bool contains(const MonoidValue& v) const noexcept;

  /// Structural equality, which is element equality for every family except
  /// presentations (UnsupportedFamily there).
  bool equal(const MonoidValue& a, const MonoidValue& b) const;

  bool is_finite() const noexcept;
  std::size_t size() const;
  /// Every element in a fixed order (finite monoids only).
  std::vector<MonoidValue> elements() const;
  /// Position of v in elements() (finite monoids only).
  std::size_t index_of(const MonoidValue& v) const;
  /// A generating set of the monoid.
  std::vector<MonoidValue> generators() const;

  /// Exhaustive on finite tables, by theory on free and lattice monoids,
  /// componentwise on direct sums. Presentations: UnsupportedFamily.
  bool is_cancellative() const;
  /// True when every element has an inverse (only decided for finite,
  /// free and lattice families and sums thereof).
  bool is_group() const;

  /// Random element; exponents are drawn from [0, bound] (or [-bound, bound]
  /// for lattices).
  MonoidValue sample(Lcg64& rng, std::int64_t bound = 4) const;

  // Family data.
  const std::vector<std::vector<std::size_t>>& table() const;
  std::size_t table_identity() const;
  std::size_t rank() const;
  const std::vector<Relation>& relations() const;
  const std::vector<Monoid>& components() const;
  /// Offset of component i inside a direct-sum value.
  std::size_t component_offset(std::size_t i) const;
  MonoidValue component_part(const MonoidValue& v, std::size_t i) const;

  friend bool operator==(const Monoid& a, const Monoid& b);

 private:
  explicit Monoid(std::shared_ptr<const detail::MonoidData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::MonoidData> data_;
};

/// Truncated addition on {0, ..., cap}: a + b = min(a + b, cap).
Monoid truncated_addition(std::size_t cap);
/// ℤ/n under addition.
Monoid cyclic_group(std::size_t n);
/// ℤ/n under multiplication.
Monoid multiplicative_residues(std::size_t n);

/// M⁰ = {x : ∃y, x + y = y}, in elements() order. Finite monoids only.
std::vector<MonoidValue> quasi_zero_submonoid(const Monoid& m);

using Comparator =
    std::function<std::strong_ordering(const MonoidValue&, const MonoidValue&)>;

struct OrderedMonoid {
  Monoid monoid;
  Comparator compare;
};

/// Lexicographic comparison of integer parts; the usual order on ℕ and ℤ and
/// the lexicographic order on ℕᵏ and ℤʳ.
std::strong_ordering integer_lex(const MonoidValue& a, const MonoidValue& b);

/// Lexicographic order on a direct sum whose component i is ordered by
/// orders[i]; components are scanned in index order. Throws MissingOrder
/// when a component has no comparator.
std::strong_ordering lex_compare(const Monoid& sum, std::span<const Comparator> orders,
                                 const MonoidValue& a, const MonoidValue& b);
Comparator lex_order(const Monoid& sum, std::vector<Comparator> orders);

struct OrderViolation {
  std::string law;
  MonoidValue a;
  MonoidValue b;
  MonoidValue c;
};

struct OrderCheck {
  bool ok = true;
  std::optional<OrderViolation> violation;
  std::size_t triples_checked = 0;
};

/// Totality, transitivity and compatibility (strict when the monoid is
/// cancellative). Finite monoids are checked exhaustively, infinite ones on
/// sample_budget random triples.
OrderCheck check_order_compatible(const OrderedMonoid& om, std::size_t sample_budget,
                                  std::uint64_t seed = 0, std::int64_t sample_bound = 6);

/// Exhaustive check restricted to a finite subset of the monoid (the subset
/// does not need to be closed under the operation).
OrderCheck check_order_on(const OrderedMonoid& om, std::span<const MonoidValue> elements);

/// All integer vectors in [lo, hi]^rank, in lexicographic order.
std::vector<MonoidValue> integer_box(std::size_t rank, std::int64_t lo, std::int64_t hi);

}  // namespace grothring
