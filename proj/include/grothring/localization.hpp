#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grothring/grothendieck.hpp"
#include "grothring/ring.hpp"

namespace grothring {

/// Exponent vector over the generators of a multiplicative set.
using Certificate = std::vector<unsigned>;

/// Submonoid of (R, ·) generated by finitely many elements; 1 is the empty
/// product. Members are certified by exponent vectors.
template <class R>
class MultiplicativeSet {
 public:
  using Elem = typename R::Elem;

  /// nzd is verified from the ring unless `assume_nonzerodivisors` is set.
  MultiplicativeSet(R ring, std::vector<Elem> generators, bool assume_nonzerodivisors = false)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    homogeneous_ = true;
    if constexpr (requires(const R& r, const Elem& e) { r.is_homogeneous(e); }) {
      for (const auto& g : generators_) homogeneous_ = homogeneous_ && ring_.is_homogeneous(g);
    }
    nzd_ = assume_nonzerodivisors;
    if (!nzd_) {
      nzd_ = true;
      for (const auto& g : generators_) {
        const auto v = ring_.nonzerodivisor(g);
        nzd_ = nzd_ && v.has_value() && *v;
      }
    }
    if (ring_.is_finite()) build_closure();
  }

  const R& ring() const noexcept { return ring_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  /// Every generator has a single-degree support (trivially true for
  /// ungraded rings).
  bool homogeneous() const noexcept { return homogeneous_; }
  bool nonzerodivisors() const noexcept { return nzd_; }

  Elem product(const Certificate& c) const {
    if (c.size() != generators_.size())
      throw AlgebraError(ErrorKind::MalformedDenominator, "certificate has the wrong length");
    Elem out = ring_.one();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (unsigned k = 0; k < c[i]; ++k) out = ring_.mul(out, generators_[i]);
    return out;
  }

  /// Some exponent vector of total degree at most max_total whose product
  /// equals x.
  std::optional<Certificate> certify(const Elem& x, unsigned max_total = 12) const {
    if (!closure_.empty()) {
      for (const auto& [e, c] : closure_)
        if (ring_.equal(e, x)) return c;
      return std::nullopt;
    }
    Certificate c(generators_.size(), 0);
    std::optional<Certificate> found;
    search(x, ring_.one(), 0, max_total, c, found);
    return found;
  }

  /// All members with a certificate each (finite rings only).
  const std::vector<std::pair<Elem, Certificate>>& closure() const {
    if (!ring_.is_finite())
      throw AlgebraError(ErrorKind::OracleRequired, "closure needs a finite ring");
    return closure_;
  }

  std::vector<Elem> closure_elements() const {
    std::vector<Elem> out;
    for (const auto& [e, c] : closure()) out.push_back(e);
    return out;
  }

 private:
  void build_closure() {
    std::map<Elem, Certificate> seen;
    std::vector<Elem> frontier{ring_.one()};
    seen.emplace(ring_.one(), Certificate(generators_.size(), 0));
    closure_.emplace_back(ring_.one(), Certificate(generators_.size(), 0));
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (const auto& x : frontier)
        for (std::size_t i = 0; i < generators_.size(); ++i) {
          auto y = ring_.mul(x, generators_[i]);
          if (seen.count(y)) continue;
          auto c = seen.at(x);
          ++c[i];
          seen.emplace(y, c);
          closure_.emplace_back(y, c);
          next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }

  void search(const Elem& x, const Elem& acc, std::size_t from, unsigned budget, Certificate& c,
              std::optional<Certificate>& found) const {
    if (found) return;
    if (ring_.equal(acc, x)) {
      found = c;
      return;
    }
    if (budget == 0) return;
    for (std::size_t i = from; i < generators_.size() && !found; ++i) {
      ++c[i];
      search(x, ring_.mul(acc, generators_[i]), i, budget - 1, c, found);
      --c[i];
    }
  }

  R ring_;
  std::vector<Elem> generators_;
  bool homogeneous_ = true;
  bool nzd_ = false;
  std::vector<std::pair<Elem, Certificate>> closure_;
};

/// r/s with s certified in S. Equality is semantic (Localization::eq).
template <class R>
struct Fraction {
  typename R::Elem num;
  typename R::Elem den;
  Certificate cert;
};

enum class FracStrategy { CrossMultiplication, ExhaustiveWitness };

const char* to_string(FracStrategy s) noexcept;

/// S⁻¹R. Equality uses cross-multiplication when S consists of
/// non-zero-divisors and exhaustive witness search over S when R is finite;
/// any other configuration is rejected with UndecidableConfiguration.
template <class R>
class Localization {
 public:
  using BaseElem = typename R::Elem;
  using Elem = Fraction<R>;

  explicit Localization(MultiplicativeSet<R> s) : set_(std::move(s)) {
    if (set_.nonzerodivisors())
      strategy_ = FracStrategy::CrossMultiplication;
    else if (set_.ring().is_finite())
      strategy_ = FracStrategy::ExhaustiveWitness;
    else
      throw AlgebraError(ErrorKind::UndecidableConfiguration,
                         "fraction equality needs non-zero-divisor denominators or a finite ring");
  }

  Localization(MultiplicativeSet<R> s, FracStrategy forced) : set_(std::move(s)), strategy_(forced) {
    if (forced == FracStrategy::CrossMultiplication && !set_.nonzerodivisors())
      throw AlgebraError(ErrorKind::StrategyUnavailable, "S contains a possible zero-divisor");
    if (forced == FracStrategy::ExhaustiveWitness && !set_.ring().is_finite())
      throw AlgebraError(ErrorKind::StrategyUnavailable, "witness search needs a finite ring");
  }

  const R& base() const noexcept { return set_.ring(); }
  const MultiplicativeSet<R>& set() const noexcept { return set_; }
  FracStrategy strategy() const noexcept { return strategy_; }

  Elem fraction(const BaseElem& r, const Certificate& c) const {
    return Elem{r, set_.product(c), c};
  }
  /// Certifies s ∈ S (MalformedDenominator when no certificate is found).
  Elem fraction(const BaseElem& r, const BaseElem& s) const {
    const auto c = set_.certify(s);
    if (!c)
      throw AlgebraError(ErrorKind::MalformedDenominator,
                         base().format(s) + " is not certified in S");
    return fraction(r, *c);
  }
  Elem from_base(const BaseElem& r) const {
    return Elem{r, base().one(), Certificate(set_.generators().size(), 0)};
  }
  Elem zero() const { return from_base(base().zero()); }
  Elem one() const { return from_base(base().one()); }

  /// Some t ∈ S with t(rs′ − r′s) = 0.
  std::optional<BaseElem> witness(const Elem& f, const Elem& g) const {
    const auto& r = base();
    const auto d = r.sub(r.mul(f.num, g.den), r.mul(g.num, f.den));
    if (strategy_ == FracStrategy::CrossMultiplication) {
      if (r.is_zero(d)) return r.one();
      return std::nullopt;
    }
    for (const auto& [t, c] : set_.closure())
      if (r.is_zero(r.mul(t, d))) return t;
    return std::nullopt;
  }
  bool eq(const Elem& f, const Elem& g) const { return witness(f, g).has_value(); }
  bool equal(const Elem& f, const Elem& g) const { return eq(f, g); }
  bool is_zero(const Elem& f) const { return eq(f, zero()); }

  Elem add(const Elem& f, const Elem& g) const {
    const auto& r = base();
    return Elem{r.add(r.mul(f.num, g.den), r.mul(g.num, f.den)), r.mul(f.den, g.den),
                add_cert(f.cert, g.cert)};
  }
  Elem mul(const Elem& f, const Elem& g) const {
    const auto& r = base();
    return Elem{r.mul(f.num, g.num), r.mul(f.den, g.den), add_cert(f.cert, g.cert)};
  }
  Elem neg(const Elem& f) const { return Elem{base().neg(f.num), f.den, f.cert}; }
  Elem sub(const Elem& f, const Elem& g) const { return add(f, neg(g)); }

  /// True when every fraction is zero (0 ∈ S).
  bool is_zero_ring() const { return eq(one(), zero()); }

  std::string format(const Elem& f) const {
    return "(" + base().format(f.num) + ")/(" + base().format(f.den) + ")";
  }

 private:
  static Certificate add_cert(const Certificate& a, const Certificate& b) {
    Certificate c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  }

  MultiplicativeSet<R> set_;
  FracStrategy strategy_;
};

/// Random fraction: numerator from `numerator`, denominator a random product
/// of generators with exponents in [0, max_exp].
template <class R, class Sampler>
Fraction<R> sample_fraction(const Localization<R>& loc, Lcg64& rng, Sampler&& numerator,
                            unsigned max_exp = 2) {
  Certificate c(loc.set().generators().size());
  for (auto& e : c) e = static_cast<unsigned>(rng.below(max_exp + 1));
  return loc.fraction(numerator(rng), c);
}

/// S̄ = {a : ∃b, ab ∈ S}, sorted (finite rings only; OracleRequired otherwise).
template <class R>
std::vector<typename R::Elem> saturate(const MultiplicativeSet<R>& s) {
  const auto& r = s.ring();
  if (!r.is_finite())
    throw AlgebraError(ErrorKind::OracleRequired,
                       "saturation of an infinite ring needs a membership oracle");
  const auto members = s.closure_elements();
  const std::set<typename R::Elem> in_s(members.begin(), members.end());
  const auto els = r.elements();
  std::vector<typename R::Elem> out;
  for (const auto& a : els)
    for (const auto& b : els)
      if (in_s.count(r.mul(a, b))) {
        out.push_back(a);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

/// Some candidate b with a·b ∈ S, for rings where S is only known through a
/// membership predicate.
template <class R>
std::optional<typename R::Elem> saturation_witness(
    const R& ring, const typename R::Elem& a,
    const std::function<bool(const typename R::Elem&)>& in_s,
    const std::vector<typename R::Elem>& candidates) {
  for (const auto& b : candidates)
    if (in_s(ring.mul(a, b))) return b;
  return std::nullopt;
}

/// Representatives of every class of S⁻¹R (finite base rings only).
template <class R>
std::vector<Fraction<R>> fraction_classes(const Localization<R>& loc) {
  std::vector<Fraction<R>> reps;
  for (const auto& t : loc.set().closure())
    for (const auto& r : loc.base().elements()) {
      auto f = loc.fraction(r, t.second);
      if (std::none_of(reps.begin(), reps.end(), [&](const auto& g) { return loc.eq(f, g); }))
        reps.push_back(std::move(f));
    }
  return reps;
}

template <class R>
struct UnitGroup {
  std::vector<Fraction<R>> elements;

  std::size_t size() const noexcept { return elements.size(); }
  /// Position of the class of f, or size() when f is not a unit here.
  std::size_t index_of(const Localization<R>& loc, const Fraction<R>& f) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (loc.eq(elements[i], f)) return i;
    return elements.size();
  }
};

/// (S⁻¹R)* by exhaustive class enumeration (finite base rings only).
template <class R>
UnitGroup<R> units_of_localization(const Localization<R>& loc) {
  const auto classes = fraction_classes(loc);
  UnitGroup<R> out;
  const auto one = loc.one();
  for (const auto& c : classes)
    if (std::any_of(classes.begin(), classes.end(),
                    [&](const auto& d) { return loc.eq(loc.mul(c, d), one); }))
      out.elements.push_back(c);
  return out;
}

/// Outcome of checking [s, t] ↦ s/t from G(T) into (S⁻¹R)*.
struct GrothUnitsReport {
  std::size_t groth_order = 0;
  std::size_t units_order = 0;
  bool well_defined = false;
  bool morphism = false;
  bool injective = false;
  bool surjective = false;

  bool embedding() const noexcept { return well_defined && morphism && injective; }
  bool isomorphism() const noexcept { return embedding() && surjective; }
};

/// Builds G(T) for a multiplicatively closed T ⊆ S̄ (as a Cayley monoid under
/// multiplication) and checks [s, t] ↦ s/t exhaustively. Each t ∈ T is moved
/// into S by a multiplier b with tb ∈ S, so the image is sb/tb.
template <class R>
GrothUnitsReport groth_units_map(const Localization<R>& loc,
                                 const std::vector<typename R::Elem>& t_set) {
  using E = typename R::Elem;
  const auto& r = loc.base();
  std::map<E, std::size_t> index;
  for (std::size_t i = 0; i < t_set.size(); ++i) index.emplace(t_set[i], i);
  const auto one_it = index.find(r.one());
  if (one_it == index.end()) throw AlgebraError(ErrorKind::InvalidInput, "T must contain 1");
  std::vector<std::vector<std::size_t>> table(t_set.size(), std::vector<std::size_t>(t_set.size()));
  for (std::size_t i = 0; i < t_set.size(); ++i)
    for (std::size_t j = 0; j < t_set.size(); ++j) {
      const auto it = index.find(r.mul(t_set[i], t_set[j]));
      if (it == index.end())
        throw AlgebraError(ErrorKind::InvalidInput, "T is not multiplicatively closed");
      table[i][j] = it->second;
    }

  const auto& closure = loc.set().closure();
  std::vector<std::pair<E, Certificate>> into_s;
  for (const auto& t : t_set) {
    bool found = false;
    for (const auto& b : r.elements()) {
      const auto tb = r.mul(t, b);
      for (const auto& [e, c] : closure)
        if (r.equal(e, tb)) {
          into_s.emplace_back(b, c);
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) throw AlgebraError(ErrorKind::InvalidInput, "T is not inside the saturation of S");
  }
  auto image = [&](const GrothElement& x) {
    const auto a = static_cast<std::size_t>(x.first[0]);
    const auto b = static_cast<std::size_t>(x.second[0]);
    return loc.fraction(r.mul(t_set[a], into_s[b].first), into_s[b].second);
  };

  const auto monoid = Monoid::cayley(std::move(table), one_it->second);
  const GrothendieckGroup g(monoid, EqStrategy::FiniteWitness);
  const FiniteGrothClasses classes(g);
  const auto units = units_of_localization(loc);

  GrothUnitsReport rep;
  rep.groth_order = classes.size();
  rep.units_order = units.size();
  const auto& reps = classes.representatives();
  std::vector<Fraction<R>> images;
  for (const auto& x : reps) images.push_back(image(x));

  rep.well_defined = true;
  for (const auto& a : monoid.elements())
    for (const auto& b : monoid.elements()) {
      const GrothElement x{a, b};
      rep.well_defined = rep.well_defined && loc.eq(image(x), images[classes.index_of(x)]) &&
                         units.index_of(loc, image(x)) < units.size();
    }
  rep.morphism = true;
  for (const auto& x : reps)
    for (const auto& y : reps)
      rep.morphism = rep.morphism && loc.eq(image(g.add(x, y)), loc.mul(image(x), image(y)));
  rep.injective = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      rep.injective = rep.injective && !loc.eq(images[i], images[j]);
  rep.surjective = std::all_of(units.elements.begin(), units.elements.end(), [&](const auto& u) {
    return std::any_of(images.begin(), images.end(), [&](const auto& v) { return loc.eq(u, v); });
  });
  return rep;
}

/// G(S) → (S⁻¹R)*, [s, t] ↦ s/t.
template <class R>
GrothUnitsReport groth_units_embedding(const Localization<R>& loc) {
  return groth_units_map(loc, loc.set().closure_elements());
}

/// G(S̄) → (S⁻¹R)*.
template <class R>
GrothUnitsReport groth_units_iso(const Localization<R>& loc) {
  return groth_units_map(loc, saturate(loc.set()));
}

/// Smallest ideal containing the generators, sorted (finite rings only).
template <class R>
std::vector<typename R::Elem> ideal_closure(const R& ring,
                                            const std::vector<typename R::Elem>& gens) {
  using E = typename R::Elem;
  const auto els = ring.elements();
  std::set<E> ideal{ring.zero()};
  for (const auto& g : gens)
    for (const auto& a : els) ideal.insert(ring.mul(a, g));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<E> cur(ideal.begin(), ideal.end());
    for (const auto& a : cur)
      for (const auto& b : cur) grew = ideal.insert(ring.add(a, b)).second || grew;
  }
  return {ideal.begin(), ideal.end()};
}

/// Every ideal, as sorted element lists: principal ideals joined pairwise
/// until nothing new appears.
template <class R>
std::vector<std::vector<typename R::Elem>> all_ideals(const R& ring) {
  using E = typename R::Elem;
  std::set<std::vector<E>> ideals;
  for (const auto& a : ring.elements()) ideals.insert(ideal_closure(ring, {a}));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<E>> cur(ideals.begin(), ideals.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<E> gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        grew = ideals.insert(ideal_closure(ring, gens)).second || grew;
      }
  }
  return {ideals.begin(), ideals.end()};
}

template <class R>
std::vector<std::vector<typename R::Elem>> maximal_ideals(const R& ring) {
  const auto ideals = all_ideals(ring);
  const std::size_t n = ring.size();
  std::vector<std::vector<typename R::Elem>> out;
  for (const auto& i : ideals) {
    if (i.size() == n) continue;
    const bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const auto& j) {
      return j.size() != n && j.size() > i.size() &&
             std::includes(j.begin(), j.end(), i.begin(), i.end());
    });
    if (maximal) out.push_back(i);
  }
  return out;
}

template <class R>
std::vector<std::vector<typename R::Elem>> prime_ideals(const R& ring) {
  const auto els = ring.elements();
  std::vector<std::vector<typename R::Elem>> out;
  for (const auto& p : all_ideals(ring)) {
    if (p.size() == els.size()) continue;
    const std::set<typename R::Elem> in(p.begin(), p.end());
    bool prime = true;
    for (const auto& a : els)
      for (const auto& b : els)
        if (in.count(ring.mul(a, b)) && !in.count(a) && !in.count(b)) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

/// R ∖ 𝔭.
template <class R>
std::vector<typename R::Elem> complement(const R& ring, const std::vector<typename R::Elem>& p) {
  std::vector<typename R::Elem> out;
  for (const auto& a : ring.elements())
    if (!std::binary_search(p.begin(), p.end(), a)) out.push_back(a);
  return out;
}

/// Non-zero-divisors of a finite ring, sorted.
template <class R>
std::vector<typename R::Elem> nonzerodivisors(const R& ring) {
  const auto els = ring.elements();
  std::vector<typename R::Elem> out;
  for (const auto& a : els)
    if (std::none_of(els.begin(), els.end(), [&](const auto& b) {
          return !ring.is_zero(b) && ring.is_zero(ring.mul(a, b));
        }))
      out.push_back(a);
  return out;
}

template <class R>
struct OnePlusIdealReport {
  std::vector<typename R::Elem> ideal;
  std::vector<typename R::Elem> s_set;
  std::vector<typename R::Elem> saturation;
  std::vector<std::vector<typename R::Elem>> maximal_over_ideal;
  std::vector<typename R::Elem> t_set;
  bool saturation_equals_t = false;
  GrothUnitsReport units;

  bool ok() const noexcept { return saturation_equals_t && units.isomorphism(); }
};

/// S = 1 + I, its saturation, and T = R ∖ ⋃{𝔪 maximal, I ⊆ 𝔪}; checks
/// S̄ = T and that G(T) → (S⁻¹R)* is an isomorphism. With no maximal ideal
/// over I (I = R), T is all of R.
template <class R>
OnePlusIdealReport<R> one_plus_ideal_check(const R& ring,
                                           const std::vector<typename R::Elem>& ideal_gens) {
  using E = typename R::Elem;
  OnePlusIdealReport<R> rep;
  rep.ideal = ideal_closure(ring, ideal_gens);
  std::set<E> s;
  for (const auto& i : rep.ideal) s.insert(ring.add(ring.one(), i));
  rep.s_set.assign(s.begin(), s.end());
  const Localization<R> loc{MultiplicativeSet<R>(ring, rep.s_set)};
  rep.saturation = saturate(loc.set());
  for (const auto& m : maximal_ideals(ring))
    if (std::includes(m.begin(), m.end(), rep.ideal.begin(), rep.ideal.end()))
      rep.maximal_over_ideal.push_back(m);
  for (const auto& a : ring.elements())
    if (std::none_of(rep.maximal_over_ideal.begin(), rep.maximal_over_ideal.end(),
                     [&](const auto& m) { return std::binary_search(m.begin(), m.end(), a); }))
      rep.t_set.push_back(a);
  std::sort(rep.t_set.begin(), rep.t_set.end());
  rep.saturation_equals_t = rep.saturation == rep.t_set;
  rep.units = groth_units_map(loc, rep.t_set);
  return rep;
}

// Graded localizations of monoid rings.

using MRFraction = Fraction<MonoidRing>;
using MRLocalization = Localization<MonoidRing>;

/// [deg r, deg s] for a nonzero fraction with homogeneous numerator and
/// denominator.
GrothElement fraction_degree(const MRLocalization& loc, const GrothendieckGroup& g,
                             const MRFraction& f);

/// f = Σ f_x with f_x ∈ (S⁻¹R)_x: the numerator is split into homogeneous
/// parts over the common denominator and keys are merged by groth_eq.
/// Components equal to zero are dropped. S must be homogeneous.
std::vector<std::pair<GrothElement, MRFraction>> decompose_fraction(const MRLocalization& loc,
                                                                     const GrothendieckGroup& g,
                                                                     const MRFraction& f);

/// L = {[m, deg s]} ⊆ G, generated by the images of the monoid generators
/// and the classes [0, deg sᵢ]. Materialized as sums of at most `depth`
/// generators; elements are deduplicated by their coordinates in the
/// presented model of G.
class SupportSubmonoid {
 public:
  SupportSubmonoid(const MRLocalization& loc, const GrothendieckGroup& g, std::size_t depth = 8);

  const std::vector<GrothElement>& generators() const noexcept { return generators_; }
  const std::vector<GrothElement>& elements() const noexcept { return elements_; }
  std::size_t depth() const noexcept { return depth_; }
  bool contains(const GrothElement& x) const;
  /// Free coordinates followed by torsion coordinates.
  std::vector<mpz_class> coordinates(const GrothElement& x) const;

 private:
  std::shared_ptr<const PresentedModel> model_;
  std::vector<GrothElement> generators_;
  std::vector<GrothElement> elements_;
  std::set<std::vector<mpz_class>> keys_;
  std::size_t depth_;
};

struct KxReport {
  unsigned long p = 0;
  bool x_not_in_s = false;
  bool x_in_saturation = false;
  /// x/1 ≡ x³/x² with x³, x² ∈ S.
  bool x_rewrite_ok = false;
  std::size_t samples = 0;
  /// Every sampled unit a·xᵐ/(b·xⁿ) equals a·x^{m+2}/(b·x^{n+2}) with both
  /// terms in S, and that fraction is invertible.
  bool samples_ok = false;

  bool ok() const noexcept { return x_not_in_s && x_in_saturation && x_rewrite_ok && samples_ok; }
};

/// K[x] with K = ℤ/p and S = {a·xⁿ : a ≠ 0, n ≠ 1}.
KxReport kx_counterexample_check(unsigned long p, std::size_t samples = 200,
                                 std::uint64_t seed = 0);

}  // namespace grothring
