#include "grothring/ring.hpp"

#include <algorithm>
#include <set>

namespace grothring {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Decodes code into |M| base-n digits.
void digits_of(std::size_t code, std::size_t n, std::vector<std::size_t>& out) {
  for (auto& d : out) {
    d = code % n;
    code /= n;
  }
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base)
      throw AlgebraError(ErrorKind::UnsupportedFamily, "monoid ring too large to enumerate");
    r *= base;
  }
  return r;
}

constexpr std::size_t kEnumerationLimit = std::size_t{1} << 24;

void require_finite(const Ring& r, const Monoid& m) {
  if (!r.is_finite() || !m.is_finite())
    throw AlgebraError(ErrorKind::UnsupportedFamily,
                       "exhaustive search needs a finite ring and a finite monoid");
}

}  // namespace

Ring::Ring(unsigned long n) : modulus_(n), field_(is_prime(n)) {}

Ring Ring::integers_mod(unsigned long n) {
  if (n < 2) throw AlgebraError(ErrorKind::InvalidInput, "modulus must be at least 2");
  return Ring(n);
}

std::size_t Ring::size() const {
  if (is_integers()) throw AlgebraError(ErrorKind::UnsupportedFamily, "ℤ is infinite");
  return modulus_.get_ui();
}

std::vector<Ring::Elem> Ring::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(static_cast<unsigned long>(i));
  return out;
}

Ring::Elem Ring::from(const mpz_class& v) const {
  if (is_integers()) return v;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

std::optional<bool> Ring::nonzerodivisor(const Elem& a) const {
  if (is_integers()) return a != 0;
  mpz_class g;
  const mpz_class r = from(a);
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  return g == 1;
}

bool Ring::is_unit(const Elem& a) const {
  if (is_integers()) return a == 1 || a == -1;
  return *nonzerodivisor(a);
}

std::string to_string(const Ring& r) {
  return r.is_integers() ? "Z" : "Z/" + r.modulus().get_str();
}

mpz_class MRElement::coefficient(const MonoidValue& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool operator<(const MRElement& a, const MRElement& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

MonoidRing::MonoidRing(Ring ring, Monoid monoid)
    : ctx_(std::make_shared<const detail::MonoidRingContext>(
          detail::MonoidRingContext{std::move(ring), std::move(monoid)})) {}

bool operator==(const MonoidRing& a, const MonoidRing& b) {
  return a.ctx_ == b.ctx_ || (a.ctx_->ring == b.ctx_->ring && a.ctx_->monoid == b.ctx_->monoid);
}

void MonoidRing::own(const Elem& f) const {
  if (!f.ctx_ || f.ctx_ == ctx_) return;
  if (f.ctx_->ring == ctx_->ring && f.ctx_->monoid == ctx_->monoid) return;
  throw AlgebraError(ErrorKind::BaseMismatch, "element belongs to a different monoid ring");
}

MonoidRing::Elem MonoidRing::make(MRElement::Terms terms) const {
  Elem e;
  e.ctx_ = ctx_;
  for (auto it = terms.begin(); it != terms.end();) {
    it->second = coefficients().from(it->second);
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  e.terms_ = std::move(terms);
  return e;
}

MonoidRing::Elem MonoidRing::zero() const { return make({}); }

MonoidRing::Elem MonoidRing::monomial(const mpz_class& c, const MonoidValue& m) const {
  monoid().check(m);
  return make({{m, c}});
}

MonoidRing::Elem MonoidRing::from_terms(
    const std::vector<std::pair<mpz_class, MonoidValue>>& terms) const {
  MRElement::Terms t;
  for (const auto& [c, m] : terms) {
    monoid().check(m);
    t[m] += c;
  }
  return make(std::move(t));
}

MonoidRing::Elem MonoidRing::add(const Elem& f, const Elem& g) const {
  own(f);
  own(g);
  auto t = f.terms_;
  for (const auto& [m, c] : g.terms_) t[m] += c;
  return make(std::move(t));
}

MonoidRing::Elem MonoidRing::neg(const Elem& f) const {
  own(f);
  auto t = f.terms_;
  for (auto& [m, c] : t) c = -c;
  return make(std::move(t));
}

MonoidRing::Elem MonoidRing::sub(const Elem& f, const Elem& g) const { return add(f, neg(g)); }

MonoidRing::Elem MonoidRing::mul(const Elem& f, const Elem& g) const {
  own(f);
  own(g);
  MRElement::Terms t;
  for (const auto& [a, x] : f.terms_)
    for (const auto& [b, y] : g.terms_) t[monoid().op(a, b)] += x * y;
  return make(std::move(t));
}

MonoidRing::Elem MonoidRing::scale(const mpz_class& c, const Elem& f) const {
  own(f);
  auto t = f.terms_;
  for (auto& [m, x] : t) x *= c;
  return make(std::move(t));
}

bool MonoidRing::is_zero(const Elem& f) const {
  own(f);
  return f.terms_.empty();
}

bool MonoidRing::equal(const Elem& f, const Elem& g) const { return is_zero(sub(f, g)); }

bool MonoidRing::is_homogeneous(const Elem& f) const {
  own(f);
  return f.terms_.size() == 1;
}

MonoidValue MonoidRing::degree(const Elem& f) const {
  own(f);
  if (f.terms_.empty()) throw AlgebraError(ErrorKind::ZeroHasNoDegree, "zero has no degree");
  if (f.terms_.size() != 1)
    throw AlgebraError(ErrorKind::NotHomogeneous, format(f) + " is not homogeneous");
  return f.terms_.begin()->first;
}

bool MonoidRing::is_finite() const { return coefficients().is_finite() && monoid().is_finite(); }

std::size_t MonoidRing::size() const {
  require_finite(coefficients(), monoid());
  return checked_power(coefficients().size(), monoid().size(), kEnumerationLimit);
}

std::vector<MonoidRing::Elem> MonoidRing::elements() const {
  const std::size_t total = size();
  const auto basis = monoid().elements();
  const std::size_t n = coefficients().size();
  std::vector<std::size_t> digits(basis.size());
  std::vector<Elem> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    digits_of(code, n, digits);
    MRElement::Terms t;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (digits[i] != 0) t.emplace(basis[i], static_cast<unsigned long>(digits[i]));
    out.push_back(make(std::move(t)));
  }
  return out;
}

std::optional<bool> MonoidRing::nonzerodivisor(const Elem& f) const {
  own(f);
  if (f.terms_.empty()) return false;
  if (is_finite() && size() <= (std::size_t{1} << 16)) {
    for (const auto& g : elements())
      if (!g.is_zero() && mul(f, g).is_zero()) return false;
    return true;
  }
  const auto kind = monoid().kind();
  if (coefficients().is_domain() && (kind == MonoidKind::Free || kind == MonoidKind::Lattice))
    return true;
  if (f.terms_.size() == 1 && kind != MonoidKind::Presentation && monoid().is_cancellative())
    return coefficients().nonzerodivisor(f.terms_.begin()->second);
  return std::nullopt;
}

MonoidRing::Elem MonoidRing::sample(Lcg64& rng, std::size_t max_terms, long coeff_bound,
                                    std::int64_t exp_bound) const {
  MRElement::Terms t;
  const auto n = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_terms)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = rng.range(-coeff_bound, coeff_bound);
    t[monoid().sample(rng, exp_bound)] += static_cast<long>(c);
  }
  return make(std::move(t));
}

std::string MonoidRing::format(const Elem& f) const {
  if (f.terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "e" + to_string(m);
  }
  return out;
}

std::vector<HomogeneousPart> homogeneous_components(const MonoidRing& ring, const MRElement& f) {
  std::vector<HomogeneousPart> out;
  for (const auto& [m, c] : f.terms()) out.push_back({m, ring.monomial(c, m)});
  return out;
}

std::vector<std::pair<GrothElement, MRElement>> regrade(const MonoidRing& ring,
                                                        const MRElement& f,
                                                        const GrothendieckGroup& g) {
  std::vector<std::pair<GrothElement, MRElement>> out;
  for (const auto& [m, c] : f.terms()) {
    const auto key = g.canonical(m);
    const auto part = ring.monomial(c, m);
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& kv) { return g.eq(kv.first, key); });
    if (it == out.end())
      out.emplace_back(g.reduced(key), part);
    else
      it->second = ring.add(it->second, part);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool monomial_is_nonzerodivisor(const Ring& r, const Monoid& m, const MonoidValue& degree) {
  require_finite(r, m);
  m.check(degree);
  const auto basis = m.elements();
  const std::size_t k = basis.size();
  const std::size_t n = r.size();
  const std::size_t total = checked_power(n, k, kEnumerationLimit);
  std::vector<std::size_t> shift(k);
  for (std::size_t j = 0; j < k; ++j) shift[j] = m.index_of(m.op(degree, basis[j]));
  std::vector<std::size_t> digits(k);
  std::vector<std::size_t> product(k);
  for (std::size_t code = 1; code < total; ++code) {
    digits_of(code, n, digits);
    std::fill(product.begin(), product.end(), 0);
    for (std::size_t j = 0; j < k; ++j) product[shift[j]] = (product[shift[j]] + digits[j]) % n;
    if (std::all_of(product.begin(), product.end(), [](std::size_t x) { return x == 0; }))
      return false;
  }
  return true;
}

std::vector<MonoidValue> degrees_submonoid(const MonoidRing& ring,
                                           const std::vector<MRElement>& generators,
                                           std::size_t depth) {
  const auto& m = ring.monoid();
  if (m.kind() == MonoidKind::Presentation || !m.is_cancellative())
    throw AlgebraError(ErrorKind::Precondition, "degrees submonoid needs a cancellative monoid");
  std::vector<MonoidValue> degs;
  for (const auto& g : generators) degs.push_back(ring.degree(g));
  std::set<MonoidValue> seen{m.identity()};
  std::vector<MonoidValue> frontier{m.identity()};
  for (std::size_t step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<MonoidValue> next;
    for (const auto& x : frontier)
      for (const auto& d : degs) {
        auto y = m.op(x, d);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

GroupRing<Ring>::Elem canonical_to_group_ring(const MonoidRing& ring, const MRElement& f,
                                              const GroupRing<Ring>& target) {
  if (!(ring.monoid() == target.group().base()) || !(ring.coefficients() == target.coefficients()))
    throw AlgebraError(ErrorKind::BaseMismatch, "group ring does not match the monoid ring");
  auto out = target.zero();
  for (const auto& [m, c] : f.terms()) target.insert(out, target.group().canonical(m), c);
  return out;
}

bool group_ring_map_injective(const Ring& r, const GrothendieckGroup& g) {
  const auto& m = g.base();
  require_finite(r, m);
  const FiniteGrothClasses classes(g);
  const auto basis = m.elements();
  const std::size_t k = basis.size();
  const std::size_t n = r.size();
  const std::size_t total = checked_power(n, k, kEnumerationLimit);
  std::vector<std::size_t> cls(k);
  for (std::size_t j = 0; j < k; ++j) cls[j] = classes.index_of(g.canonical(basis[j]));
  std::vector<std::size_t> digits(k);
  std::vector<std::size_t> image(classes.size());
  for (std::size_t code = 1; code < total; ++code) {
    digits_of(code, n, digits);
    std::fill(image.begin(), image.end(), 0);
    for (std::size_t j = 0; j < k; ++j) image[cls[j]] = (image[cls[j]] + digits[j]) % n;
    if (std::all_of(image.begin(), image.end(), [](std::size_t x) { return x == 0; }))
      return false;
  }
  return true;
}

}  // namespace grothring
