#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grothring/localization.hpp"

namespace grothring {

/// h: T⁻¹(R[M]) → (S⁻¹R)[G] with T = {s·ε_m : s ∈ S, m ∈ M}.
///
/// T is generated by the constants sᵢ·ε_0 followed by ε_g for the monoid
/// generators g, so a denominator certificate is an S-certificate followed
/// by an exponent vector over the monoid generators. Supported monoids: free
/// and finite tables.
class HMap {
 public:
  using Coeffs = Localization<Ring>;
  using Target = GroupRing<Coeffs>;
  using TargetElem = Target::Elem;

  HMap(Ring ring, Monoid monoid, std::vector<mpz_class> s_generators);

  const MonoidRing& monoid_ring() const noexcept { return ring_; }
  const MRLocalization& source() const noexcept { return source_; }
  const Coeffs& coefficients() const noexcept { return target_.coefficients(); }
  const Target& target() const noexcept { return target_; }
  const GrothendieckGroup& group() const noexcept { return target_.group(); }

  /// num / (s·ε_n) with s given by its S-certificate.
  MRFraction source_fraction(const MRElement& num, const Certificate& s_cert,
                             const MonoidValue& n) const;
  /// num / den; den must be c·ε_n with c certified in S (MalformedDenominator).
  MRFraction source_fraction(const MRElement& num, const MRElement& den) const;

  /// Σ r_m ε_m / (s·ε_n) ↦ Σ (r_m/s)·ε_[m,n].
  TargetElem h_forward(const MRFraction& f) const;
  /// Σ (r/s)·ε_[m,n] ↦ Σ r·ε_m / (s·ε_n), over the product of all
  /// denominators.
  MRFraction h_inverse(const TargetElem& g) const;

  MRFraction sample_source(Lcg64& rng) const;
  TargetElem sample_target(Lcg64& rng) const;
  /// r·ε_m / (s·ε_n), possibly with r = 0.
  MRFraction sample_homogeneous(Lcg64& rng) const;

 private:
  Certificate monoid_certificate(const MonoidValue& n) const;
  Certificate s_part(const Certificate& t) const;
  MonoidValue degree_of(const Certificate& t) const;

  MonoidRing ring_;
  std::vector<MonoidValue> monoid_gens_;
  std::size_t s_count_;
  MRLocalization source_;
  Target target_;
};

struct IsoReport {
  std::size_t samples = 0;
  bool hom_ok = false;
  bool injective_ok = false;
  bool roundtrip_ok = false;
  bool graded_ok = false;

  bool ok() const noexcept { return hom_ok && injective_ok && roundtrip_ok && graded_ok; }
};

/// Randomized check of h: additivity and multiplicativity on `samples`
/// pairs, the homogeneous kernel test, both round trips, and that
/// decomposition keys commute with h.
IsoReport verify_iso(const HMap& h, std::size_t samples, std::uint64_t seed);

/// S = {1}: T⁻¹(R[M]) ≅ R[G].
IsoReport group_ring_specialization(const Ring& r, const Monoid& m, std::size_t samples,
                                    std::uint64_t seed);

/// R[ℕᵏ] localized at the monomials against R[ℤᵏ]: random Laurent
/// polynomials must round-trip exactly.
IsoReport laurent_iso(const Ring& r, std::size_t rank, std::size_t samples, std::uint64_t seed);

}  // namespace grothring
