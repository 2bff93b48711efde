#include "grothring/isomorphisms.hpp"

namespace grothring {

namespace {

std::vector<MRElement> t_generators(const MonoidRing& ring, const std::vector<mpz_class>& s,
                                    const std::vector<MonoidValue>& monoid_gens) {
  std::vector<MRElement> out;
  for (const auto& x : s) out.push_back(ring.constant(x));
  for (const auto& g : monoid_gens) out.push_back(ring.epsilon(g));
  return out;
}

const Monoid& supported(const Monoid& m) {
  if (m.kind() != MonoidKind::Free && m.kind() != MonoidKind::Cayley)
    throw AlgebraError(ErrorKind::UnsupportedFamily,
                       "h is implemented for free monoids and finite tables");
  return m;
}

}  // namespace

HMap::HMap(Ring ring, Monoid monoid, std::vector<mpz_class> s_generators)
    : ring_(ring, supported(monoid)),
      monoid_gens_(monoid.generators()),
      s_count_(s_generators.size()),
      source_(MultiplicativeSet<MonoidRing>(ring_, t_generators(ring_, s_generators, monoid_gens_))),
      target_(Coeffs(MultiplicativeSet<Ring>(ring, std::move(s_generators))),
              GrothendieckGroup(monoid)) {}

Certificate HMap::monoid_certificate(const MonoidValue& n) const {
  const auto& m = ring_.monoid();
  m.check(n);
  Certificate c(monoid_gens_.size(), 0);
  if (m.kind() == MonoidKind::Free) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<unsigned>(n[i]);
    return c;
  }
  if (n == m.identity()) return c;
  for (std::size_t i = 0; i < monoid_gens_.size(); ++i)
    if (monoid_gens_[i] == n) {
      c[i] = 1;
      return c;
    }
  throw AlgebraError(ErrorKind::MalformedDenominator, "degree is not a monoid generator");
}

Certificate HMap::s_part(const Certificate& t) const {
  return Certificate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(s_count_));
}

MonoidValue HMap::degree_of(const Certificate& t) const {
  const auto& m = ring_.monoid();
  auto n = m.identity();
  for (std::size_t i = 0; i < monoid_gens_.size(); ++i)
    n = m.op(n, m.multiple(monoid_gens_[i], t[s_count_ + i]));
  return n;
}

MRFraction HMap::source_fraction(const MRElement& num, const Certificate& s_cert,
                                 const MonoidValue& n) const {
  if (s_cert.size() != s_count_)
    throw AlgebraError(ErrorKind::MalformedDenominator, "S-certificate has the wrong length");
  Certificate t = s_cert;
  const auto mc = monoid_certificate(n);
  t.insert(t.end(), mc.begin(), mc.end());
  return source_.fraction(num, t);
}

MRFraction HMap::source_fraction(const MRElement& num, const MRElement& den) const {
  if (den.support_size() != 1)
    throw AlgebraError(ErrorKind::MalformedDenominator,
                       ring_.format(den) + " is not of the form s·ε_n");
  const auto& [n, c] = *den.terms().begin();
  const auto sc = coefficients().set().certify(c);
  if (!sc)
    throw AlgebraError(ErrorKind::MalformedDenominator, c.get_str() + " is not certified in S");
  return source_fraction(num, *sc, n);
}

HMap::TargetElem HMap::h_forward(const MRFraction& f) const {
  if (f.cert.size() != s_count_ + monoid_gens_.size())
    throw AlgebraError(ErrorKind::MalformedDenominator, "denominator is not certified in T");
  const auto sc = s_part(f.cert);
  const auto n = degree_of(f.cert);
  const auto expected = ring_.monomial(coefficients().set().product(sc), n);
  if (!ring_.equal(expected, f.den))
    throw AlgebraError(ErrorKind::MalformedDenominator, "denominator does not match its certificate");
  auto out = target_.zero();
  for (const auto& [m, r] : f.num.terms())
    target_.insert(out, GrothElement{m, n}, coefficients().fraction(r, sc));
  return out;
}

MRFraction HMap::h_inverse(const TargetElem& g) const {
  auto out = source_.zero();
  for (const auto& [key, c] : g.terms) {
    const auto term = source_fraction(ring_.monomial(c.num, key.first), c.cert, key.second);
    out = source_.add(out, term);
  }
  return out;
}

MRFraction HMap::sample_source(Lcg64& rng) const {
  Certificate t(s_count_ + monoid_gens_.size());
  for (auto& e : t) e = static_cast<unsigned>(rng.below(3));
  return source_.fraction(ring_.sample(rng, 3, 5, 3), t);
}

HMap::TargetElem HMap::sample_target(Lcg64& rng) const {
  auto out = target_.zero();
  const auto terms = rng.below(4);
  const auto& m = ring_.monoid();
  for (std::uint64_t i = 0; i < terms; ++i) {
    Certificate sc(s_count_);
    for (auto& e : sc) e = static_cast<unsigned>(rng.below(3));
    const auto c = coefficients().fraction(mpz_class(static_cast<long>(rng.range(-5, 5))), sc);
    target_.insert(out, GrothElement{m.sample(rng, 3), m.sample(rng, 3)}, c);
  }
  return out;
}

MRFraction HMap::sample_homogeneous(Lcg64& rng) const {
  Certificate sc(s_count_);
  for (auto& e : sc) e = static_cast<unsigned>(rng.below(3));
  const auto& m = ring_.monoid();
  const mpz_class r = static_cast<long>(rng.range(-3, 3));
  return source_fraction(ring_.monomial(r, m.sample(rng, 3)), sc, m.sample(rng, 3));
}

IsoReport verify_iso(const HMap& h, std::size_t samples, std::uint64_t seed) {
  Lcg64 rng(seed);
  const auto& src = h.source();
  const auto& tgt = h.target();
  const auto& g = h.group();
  IsoReport rep;
  rep.samples = samples;
  rep.hom_ok = rep.injective_ok = rep.roundtrip_ok = rep.graded_ok = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto f = h.sample_source(rng);
    const auto f2 = h.sample_source(rng);
    const auto hf = h.h_forward(f);
    const auto hf2 = h.h_forward(f2);
    rep.hom_ok = rep.hom_ok && tgt.equal(h.h_forward(src.add(f, f2)), tgt.add(hf, hf2)) &&
                 tgt.equal(h.h_forward(src.mul(f, f2)), tgt.mul(hf, hf2));

    const auto k = h.sample_homogeneous(rng);
    rep.injective_ok = rep.injective_ok && (tgt.is_zero(h.h_forward(k)) == src.is_zero(k));

    const auto t = h.sample_target(rng);
    rep.roundtrip_ok = rep.roundtrip_ok && src.eq(h.h_inverse(hf), f) &&
                       tgt.equal(h.h_forward(h.h_inverse(t)), t);

    const auto parts = decompose_fraction(src, g, f);
    bool graded = hf.terms.size() == parts.size();
    for (const auto& [x, fx] : parts) {
      const auto image = h.h_forward(fx);
      graded = graded && image.terms.size() == 1 && g.eq(image.terms[0].first, x) &&
               h.coefficients().eq(image.terms[0].second, tgt.coefficient(hf, x));
    }
    rep.graded_ok = rep.graded_ok && graded;
  }
  return rep;
}

IsoReport group_ring_specialization(const Ring& r, const Monoid& m, std::size_t samples,
                                    std::uint64_t seed) {
  return verify_iso(HMap(r, m, {}), samples, seed);
}

IsoReport laurent_iso(const Ring& r, std::size_t rank, std::size_t samples, std::uint64_t seed) {
  const HMap h(r, Monoid::free(rank), {});
  auto rep = verify_iso(h, samples, seed);
  // Laurent polynomials given on the group-ring side must come back exactly.
  Lcg64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto p = h.sample_target(rng);
    const auto back = h.h_forward(h.h_inverse(p));
    rep.roundtrip_ok = rep.roundtrip_ok && h.target().equal(back, p) &&
                       back.terms.size() == p.terms.size();
  }
  return rep;
}

}  // namespace grothring
