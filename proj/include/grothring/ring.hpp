#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "grothring/grothendieck.hpp"
#include "grothring/monoid.hpp"

namespace grothring {

/// ℤ or ℤ/n. Elements are mpz_class values, reduced into [0, n) for ℤ/n.
class Ring {
 public:
  using Elem = mpz_class;

  static Ring integers() { return Ring(0); }
  static Ring integers_mod(unsigned long n);

  bool is_integers() const noexcept { return modulus_ == 0; }
  /// 0 for ℤ.
  const mpz_class& modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return field_; }
  bool is_domain() const noexcept { return is_integers() || field_; }
  bool is_finite() const noexcept { return !is_integers(); }
  std::size_t size() const;
  std::vector<Elem> elements() const;

  Elem from(const mpz_class& v) const;
  Elem zero() const { return 0; }
  Elem one() const { return from(1); }
  Elem add(const Elem& a, const Elem& b) const { return from(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return from(a - b); }
  Elem neg(const Elem& a) const { return from(-a); }
  Elem mul(const Elem& a, const Elem& b) const { return from(a * b); }
  bool is_zero(const Elem& a) const { return from(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return from(a - b) == 0; }
  /// Exact for both families: a ≠ 0 over ℤ, gcd(a, n) = 1 over ℤ/n.
  std::optional<bool> nonzerodivisor(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  std::string format(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.modulus_ == b.modulus_; }

 private:
  explicit Ring(unsigned long n);
  mpz_class modulus_;
  bool field_ = false;
};

std::string to_string(const Ring& r);

namespace detail {
struct MonoidRingContext {
  Ring ring;
  Monoid monoid;
};
}  // namespace detail

/// Σ r_m ε_m with finite support and no zero coefficient stored.
class MRElement {
 public:
  using Terms = std::map<MonoidValue, mpz_class>;

  MRElement() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  /// Coefficient of ε_m (zero when m is outside the support).
  mpz_class coefficient(const MonoidValue& m) const;

  friend bool operator==(const MRElement& a, const MRElement& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MRElement& a, const MRElement& b);

 private:
  friend class MonoidRing;
  std::shared_ptr<const detail::MonoidRingContext> ctx_;
  Terms terms_;
};

struct HomogeneousPart {
  MonoidValue degree;
  MRElement value;
};

/// The monoid ring R[M], graded by M.
class MonoidRing {
 public:
  using Elem = MRElement;

  MonoidRing(Ring ring, Monoid monoid);

  const Ring& coefficients() const noexcept { return ctx_->ring; }
  const Monoid& monoid() const noexcept { return ctx_->monoid; }

  Elem zero() const;
  Elem one() const { return epsilon(monoid().identity()); }
  Elem epsilon(const MonoidValue& m) const { return monomial(1, m); }
  Elem monomial(const mpz_class& c, const MonoidValue& m) const;
  Elem constant(const mpz_class& c) const { return monomial(c, monoid().identity()); }
  /// Sum of c·ε_m over the list; repeated degrees are merged.
  Elem from_terms(const std::vector<std::pair<mpz_class, MonoidValue>>& terms) const;

  Elem add(const Elem& f, const Elem& g) const;
  Elem sub(const Elem& f, const Elem& g) const;
  Elem neg(const Elem& f) const;
  Elem mul(const Elem& f, const Elem& g) const;
  Elem scale(const mpz_class& c, const Elem& f) const;
  bool is_zero(const Elem& f) const;
  bool equal(const Elem& f, const Elem& g) const;

  /// Single-degree support.
  bool is_homogeneous(const Elem& f) const;
  /// Degree of a homogeneous element (NotHomogeneous / ZeroHasNoDegree).
  MonoidValue degree(const Elem& f) const;

  bool is_finite() const;
  std::size_t size() const;
  /// Every element, |R|^|M| of them (finite rings only).
  std::vector<Elem> elements() const;

  /// Exhaustive when R[M] is finite and small; otherwise decided only in
  /// the cases that are certain (domains over free or lattice monoids,
  /// monomials c·ε_m over a cancellative M). nullopt when unknown.
  std::optional<bool> nonzerodivisor(const Elem& f) const;

  /// Random element with up to max_terms terms, coefficients in
  /// [-coeff_bound, coeff_bound] and monoid samples drawn with exp_bound.
  Elem sample(Lcg64& rng, std::size_t max_terms = 3, long coeff_bound = 4,
              std::int64_t exp_bound = 3) const;

  std::string format(const Elem& f) const;

  friend bool operator==(const MonoidRing& a, const MonoidRing& b);

 private:
  void own(const Elem& f) const;
  Elem make(MRElement::Terms terms) const;
  std::shared_ptr<const detail::MonoidRingContext> ctx_;
};

/// Splits f along its support, in degree order. The zero element has no parts.
std::vector<HomogeneousPart> homogeneous_components(const MonoidRing& ring, const MRElement& f);

/// Groups the support of f by the class [m, 0] in G; keys are pairwise
/// inequal and the groups sum to f.
std::vector<std::pair<GrothElement, MRElement>> regrade(const MonoidRing& ring,
                                                        const MRElement& f,
                                                        const GrothendieckGroup& g);

/// Exhaustive: ε_m·f = 0 forces f = 0 over all |R|^|M| elements f.
bool monomial_is_nonzerodivisor(const Ring& r, const Monoid& m, const MonoidValue& degree);

/// Degrees of the homogeneous generators of S closed under addition, using
/// sums of at most `depth` generators. M must be cancellative.
std::vector<MonoidValue> degrees_submonoid(const MonoidRing& ring,
                                           const std::vector<MRElement>& generators,
                                           std::size_t depth = 8);

/// R[G] over a coefficient ring C, keyed by Grothendieck classes. A key is
/// stored as the pair first inserted for its class; inserting at a key equal
/// (by groth_eq) to an existing one merges coefficients.
/// C must provide Elem, zero, one, add, neg, mul, is_zero and format.
template <class C>
class GroupRing {
 public:
  using Coeff = typename C::Elem;
  struct Elem {
    std::vector<std::pair<GrothElement, Coeff>> terms;
    bool is_zero() const noexcept { return terms.empty(); }
  };

  GroupRing(C coeffs, GrothendieckGroup group)
      : coeffs_(std::move(coeffs)), group_(std::move(group)) {}

  const C& coefficients() const noexcept { return coeffs_; }
  const GrothendieckGroup& group() const noexcept { return group_; }

  Elem zero() const { return {}; }
  Elem one() const { return monomial(coeffs_.one(), group_.zero()); }
  Elem monomial(const Coeff& c, const GrothElement& key) const {
    Elem e;
    insert(e, key, c);
    return e;
  }

  /// Adds c at key, merging with a groth_eq key and pruning zeros.
  void insert(Elem& e, const GrothElement& key, const Coeff& c) const {
    for (auto it = e.terms.begin(); it != e.terms.end(); ++it) {
      if (!group_.eq(it->first, key)) continue;
      it->second = coeffs_.add(it->second, c);
      if (coeffs_.is_zero(it->second)) e.terms.erase(it);
      return;
    }
    if (!coeffs_.is_zero(c)) e.terms.emplace_back(key, c);
  }

  Elem add(const Elem& f, const Elem& g) const {
    Elem r = f;
    for (const auto& [k, c] : g.terms) insert(r, k, c);
    return r;
  }
  Elem neg(const Elem& f) const {
    Elem r = f;
    for (auto& t : r.terms) t.second = coeffs_.neg(t.second);
    return r;
  }
  Elem sub(const Elem& f, const Elem& g) const { return add(f, neg(g)); }
  Elem mul(const Elem& f, const Elem& g) const {
    Elem r;
    for (const auto& [k1, c1] : f.terms)
      for (const auto& [k2, c2] : g.terms) insert(r, group_.add(k1, k2), coeffs_.mul(c1, c2));
    return r;
  }
  bool is_zero(const Elem& f) const { return f.terms.empty(); }
  bool equal(const Elem& f, const Elem& g) const { return sub(f, g).terms.empty(); }

  /// Coefficient at the class of key (zero when absent).
  Coeff coefficient(const Elem& f, const GrothElement& key) const {
    for (const auto& [k, c] : f.terms)
      if (group_.eq(k, key)) return c;
    return coeffs_.zero();
  }

  std::string format(const Elem& f) const {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms) {
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_.format(c) + ")e" + to_string(k);
    }
    return out;
  }

 private:
  C coeffs_;
  GrothendieckGroup group_;
};

/// Σ r_m ε_m ↦ Σ r_m ε_[m,0].
GroupRing<Ring>::Elem canonical_to_group_ring(const MonoidRing& ring, const MRElement& f,
                                              const GroupRing<Ring>& target);

/// Exhaustive kernel test of the map above over all |R|^|M| elements.
bool group_ring_map_injective(const Ring& r, const GrothendieckGroup& g);

}  // namespace grothring
