#include "grothring/localization.hpp"

namespace grothring {

const char* to_string(FracStrategy s) noexcept {
  switch (s) {
    case FracStrategy::CrossMultiplication: return "cross-multiplication";
    case FracStrategy::ExhaustiveWitness: return "exhaustive-witness";
  }
  return "?";
}

namespace {

void check_grading(const MRLocalization& loc, const GrothendieckGroup& g) {
  if (!(loc.base().monoid() == g.base()))
    throw AlgebraError(ErrorKind::BaseMismatch, "Grothendieck group of a different monoid");
  if (!loc.set().homogeneous())
    throw AlgebraError(ErrorKind::Precondition, "S is not homogeneous");
}

}  // namespace

GrothElement fraction_degree(const MRLocalization& loc, const GrothendieckGroup& g,
                             const MRFraction& f) {
  check_grading(loc, g);
  if (loc.is_zero(f)) throw AlgebraError(ErrorKind::ZeroHasNoDegree, "zero fraction has no degree");
  const auto& r = loc.base();
  return g.reduced({r.degree(f.num), r.degree(f.den)});
}

std::vector<std::pair<GrothElement, MRFraction>> decompose_fraction(const MRLocalization& loc,
                                                                     const GrothendieckGroup& g,
                                                                     const MRFraction& f) {
  check_grading(loc, g);
  const auto& r = loc.base();
  std::vector<std::pair<GrothElement, MRFraction>> out;
  if (f.den.is_zero()) return out;
  const auto n = r.degree(f.den);
  for (const auto& [m, c] : f.num.terms()) {
    const GrothElement key{m, n};
    const auto part = r.monomial(c, m);
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& kv) { return g.eq(kv.first, key); });
    if (it == out.end())
      out.emplace_back(g.reduced(key), MRFraction{part, f.den, f.cert});
    else
      it->second.num = r.add(it->second.num, part);
  }
  std::erase_if(out, [&](const auto& kv) { return loc.is_zero(kv.second); });
  return out;
}

SupportSubmonoid::SupportSubmonoid(const MRLocalization& loc, const GrothendieckGroup& g,
                                   std::size_t depth)
    : model_(std::make_shared<const PresentedModel>(presented_model(g.base()))), depth_(depth) {
  check_grading(loc, g);
  const auto& m = g.base();
  for (const auto& gen : m.generators()) generators_.push_back(g.canonical(gen));
  for (const auto& s : loc.set().generators())
    if (!s.is_zero()) generators_.push_back({m.identity(), loc.base().degree(s)});

  const auto zero = g.zero();
  keys_.insert(coordinates(zero));
  elements_.push_back(zero);
  std::vector<GrothElement> frontier{zero};
  for (std::size_t step = 0; step < depth_ && !frontier.empty(); ++step) {
    std::vector<GrothElement> next;
    for (const auto& x : frontier)
      for (const auto& y : generators_) {
        auto z = g.reduced(g.add(x, y));
        if (!keys_.insert(coordinates(z)).second) continue;
        elements_.push_back(z);
        next.push_back(std::move(z));
      }
    frontier = std::move(next);
  }
}

std::vector<mpz_class> SupportSubmonoid::coordinates(const GrothElement& x) const {
  const auto v = model_->embed_class(x);
  auto c = model_->group->free_coordinates(v);
  const auto t = model_->group->torsion_coordinates(v);
  c.insert(c.end(), t.begin(), t.end());
  return c;
}

bool SupportSubmonoid::contains(const GrothElement& x) const {
  return keys_.count(coordinates(x)) != 0;
}

KxReport kx_counterexample_check(unsigned long p, std::size_t samples, std::uint64_t seed) {
  const auto k = Ring::integers_mod(p);
  if (!k.is_field()) throw AlgebraError(ErrorKind::Precondition, "K must be a prime field");
  const MonoidRing kx(k, Monoid::free(1));
  auto xpow = [&](std::int64_t n, const mpz_class& a = 1) { return kx.monomial(a, MonoidValue{n}); };
  auto in_s = [&](const MRElement& f) {
    return f.support_size() == 1 && f.terms().begin()->first[0] != 1;
  };

  std::vector<MRElement> gens;
  for (unsigned long a = 2; a < p; ++a) gens.push_back(kx.constant(a));
  gens.push_back(xpow(2));
  gens.push_back(xpow(3));
  const MRLocalization loc{MultiplicativeSet<MonoidRing>(kx, gens)};

  KxReport rep;
  rep.p = p;
  const auto x = xpow(1);
  rep.x_not_in_s = !in_s(x);
  const std::function<bool(const MRElement&)> pred = in_s;
  const auto b = saturation_witness<MonoidRing>(kx, x, pred, {kx.one(), x});
  rep.x_in_saturation = b.has_value() && *b == x;

  const auto lhs = loc.from_base(x);
  const auto rhs = loc.fraction(xpow(3), xpow(2));
  rep.x_rewrite_ok = in_s(rhs.num) && in_s(rhs.den) && loc.eq(lhs, rhs);

  Lcg64 rng(seed);
  rep.samples = samples;
  rep.samples_ok = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const mpz_class a = static_cast<unsigned long>(1 + rng.below(p - 1));
    const mpz_class c = static_cast<unsigned long>(1 + rng.below(p - 1));
    const auto m = static_cast<std::int64_t>(rng.below(7));
    const auto n = static_cast<std::int64_t>(rng.below(7));
    std::int64_t den_shift = (n == 1) ? 2 : 0;  // x itself is not a denominator
    const auto u = loc.fraction(xpow(m + den_shift, a), xpow(n + den_shift, c));
    const auto s = xpow(m + 2, a);
    const auto t = xpow(n + 2, c);
    const auto rewritten = loc.fraction(s, t);
    const auto inverse = loc.fraction(t, s);
    rep.samples_ok = rep.samples_ok && in_s(s) && in_s(t) && loc.eq(u, rewritten) &&
                     loc.eq(loc.mul(rewritten, inverse), loc.one());
  }
  return rep;
}

}  // namespace grothring
