#include <algorithm>

#include "doctest.h"
#include "grothring/ring.hpp"
#include "oracles.hpp"

using namespace grothring;

namespace {

MonoidValue v1(std::int64_t x) { return MonoidValue{x}; }

Monoid nc4() {
  return Monoid::cayley(oracle::table_of(4,
                                         [](std::size_t a, std::size_t b) {
                                           return ((a & 1) ^ (b & 1)) | ((a | b) & 2);
                                         }),
                        0);
}

std::vector<Monoid> finite_corpus() {
  return {truncated_addition(2), truncated_addition(3), cyclic_group(2), cyclic_group(4),
          multiplicative_residues(6), cyclic_group(6), nc4(),
          Monoid::direct_sum({truncated_addition(2), cyclic_group(2)})};
}

// Dense coefficient vector (in elements() order) of f.
std::vector<long> dense(const Monoid& m, const MRElement& f) {
  std::vector<long> out(m.size(), 0);
  for (const auto& [d, c] : f.terms()) out[m.index_of(d)] = c.get_si();
  return out;
}

}  // namespace

TEST_CASE("coefficient rings") {
  const auto z6 = Ring::integers_mod(6);
  CHECK(z6.from(-1) == 5);
  CHECK(z6.mul(4, 3) == 0);
  CHECK_FALSE(z6.is_field());
  CHECK(Ring::integers_mod(5).is_field());
  CHECK(*z6.nonzerodivisor(5));
  CHECK_FALSE(*z6.nonzerodivisor(2));
  CHECK(z6.elements().size() == 6);
  CHECK(Ring::integers().is_domain());
  CHECK_THROWS_AS(Ring::integers().elements(), AlgebraError);
  CHECK_THROWS_AS(Ring::integers_mod(1), AlgebraError);
}

TEST_CASE("epsilon and products") {
  const MonoidRing zx(Ring::integers(), Monoid::free(1));
  CHECK(zx.mul(zx.epsilon(v1(2)), zx.epsilon(v1(3))) == zx.epsilon(v1(5)));
  const auto f = zx.from_terms({{3, v1(0)}, {-2, v1(4)}});
  CHECK(zx.mul(f, zx.one()) == f);
  const auto x = zx.epsilon(v1(1));
  CHECK(zx.mul(zx.add(x, zx.one()), zx.sub(x, zx.one())) == zx.sub(zx.epsilon(v1(2)), zx.one()));

  const MonoidRing t2(Ring::integers_mod(2), truncated_addition(2));
  CHECK(t2.mul(t2.epsilon(v1(1)), t2.epsilon(v1(2))) == t2.epsilon(v1(2)));
  const auto killer = t2.add(t2.epsilon(v1(1)), t2.epsilon(v1(0)));
  CHECK(t2.mul(t2.epsilon(v1(2)), killer).is_zero());

  CHECK(zx.from_terms({{2, v1(1)}, {-2, v1(1)}}).is_zero());
  CHECK_THROWS_AS(zx.epsilon(v1(-1)), AlgebraError);
}

TEST_CASE("base mismatch") {
  const MonoidRing a(Ring::integers(), Monoid::free(1));
  const MonoidRing b(Ring::integers_mod(5), Monoid::free(1));
  const MonoidRing c(Ring::integers(), Monoid::free(1));
  try {
    a.add(a.one(), b.one());
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::BaseMismatch);
  }
  CHECK(a.add(a.one(), c.one()) == a.constant(2));
}

TEST_CASE("ring axioms on (Z/2)[T2] against a dense oracle") {
  const auto m = truncated_addition(2);
  const MonoidRing r(Ring::integers_mod(2), m);
  const auto els = r.elements();
  REQUIRE(els.size() == 8);
  for (const auto& f : els)
    for (const auto& g : els) {
      CHECK(dense(m, r.mul(f, g)) == oracle::dense_mul(m.table(), 2, dense(m, f), dense(m, g)));
      CHECK(r.mul(f, g) == r.mul(g, f));
      for (const auto& h : els) {
        CHECK(r.mul(r.mul(f, g), h) == r.mul(f, r.mul(g, h)));
        CHECK(r.mul(f, r.add(g, h)) == r.add(r.mul(f, g), r.mul(f, h)));
      }
    }
}

TEST_CASE("ring axioms on random elements") {
  Lcg64 rng(5);
  const std::vector<MonoidRing> rings{
      MonoidRing(Ring::integers(), Monoid::free(2)),
      MonoidRing(Ring::integers_mod(6), Monoid::lattice(1)),
      MonoidRing(Ring::integers_mod(6), Monoid::direct_sum({Monoid::free(1), cyclic_group(3)}))};
  for (const auto& r : rings)
    for (int i = 0; i < 1000; ++i) {
      const auto f = r.sample(rng), g = r.sample(rng), h = r.sample(rng);
      REQUIRE(r.mul(f, g) == r.mul(g, f));
      REQUIRE(r.mul(r.mul(f, g), h) == r.mul(f, r.mul(g, h)));
      REQUIRE(r.mul(f, r.add(g, h)) == r.add(r.mul(f, g), r.mul(f, h)));
      REQUIRE(r.add(f, r.neg(f)).is_zero());
      REQUIRE(r.mul(r.one(), f) == f);
    }
}

TEST_CASE("homogeneous components and the grading law") {
  const MonoidRing zx(Ring::integers(), Monoid::free(1));
  const auto f = zx.from_terms({{3, v1(2)}, {1, v1(5)}});
  const auto parts = homogeneous_components(zx, f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].degree == v1(2));
  CHECK(parts[1].degree == v1(5));
  CHECK(zx.add(parts[0].value, parts[1].value) == f);
  CHECK(homogeneous_components(zx, zx.zero()).empty());
  CHECK(zx.degree(zx.one()) == zx.monoid().identity());

  const MonoidRing t2(Ring::integers_mod(2), truncated_addition(2));
  CHECK(t2.degree(t2.mul(t2.epsilon(v1(1)), t2.epsilon(v1(2)))) == v1(2));

  Lcg64 rng(8);
  const MonoidRing r6(Ring::integers_mod(6), nc4());
  for (int i = 0; i < 500; ++i) {
    const auto f = r6.sample(rng), g = r6.sample(rng);
    for (const auto& p : homogeneous_components(r6, f))
      for (const auto& q : homogeneous_components(r6, g)) {
        const auto pq = r6.mul(p.value, q.value);
        if (!pq.is_zero()) CHECK(r6.degree(pq) == r6.monoid().op(p.degree, q.degree));
      }
  }
  try {
    zx.degree(f);
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
}

TEST_CASE("regrade") {
  const MonoidRing t2(Ring::integers(), truncated_addition(2));
  const GrothendieckGroup g(truncated_addition(2));
  const auto f = t2.add(t2.one(), t2.epsilon(v1(1)));
  const auto groups = regrade(t2, f, g);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].second == f);
  CHECK(regrade(t2, t2.zero(), g).empty());

  const MonoidRing zx(Ring::integers(), Monoid::free(2));
  const GrothendieckGroup gz(Monoid::free(2));
  Lcg64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto h = zx.sample(rng, 5);
    const auto gr = regrade(zx, h, gz);
    CHECK(gr.size() == h.support_size());
    auto sum = zx.zero();
    for (const auto& [k, v] : gr) sum = zx.add(sum, v);
    CHECK(sum == h);
  }

  // nc4 has G = ℤ/2; keys must be pairwise inequal and sum back.
  const MonoidRing r(Ring::integers_mod(6), nc4());
  const GrothendieckGroup gn(nc4());
  for (int i = 0; i < 200; ++i) {
    const auto h = r.sample(rng, 4);
    const auto gr = regrade(r, h, gn);
    CHECK(gr.size() <= 2);
    for (std::size_t a = 0; a < gr.size(); ++a)
      for (std::size_t b = a + 1; b < gr.size(); ++b) CHECK_FALSE(gn.eq(gr[a].first, gr[b].first));
    auto sum = r.zero();
    for (const auto& [k, v] : gr) sum = r.add(sum, v);
    CHECK(sum == h);
  }
}

TEST_CASE("monomial non-zero-divisors") {
  CHECK_FALSE(monomial_is_nonzerodivisor(Ring::integers_mod(2), truncated_addition(2), v1(2)));
  for (const auto& m : cyclic_group(2).elements())
    CHECK(monomial_is_nonzerodivisor(Ring::integers_mod(2), cyclic_group(2), m));
  for (const auto& m : finite_corpus())
    CHECK(monomial_is_nonzerodivisor(Ring::integers_mod(6), m, m.identity()));
  CHECK_THROWS_AS(monomial_is_nonzerodivisor(Ring::integers(), cyclic_group(2), v1(0)),
                  AlgebraError);

  // Dense oracle: a monomial is a zero-divisor iff some nonzero vector is killed.
  for (const auto& m : finite_corpus()) {
    if (m.kind() != MonoidKind::Cayley) continue;
    const auto vecs = oracle::all_vectors(m.size(), 2);
    for (std::size_t d = 0; d < m.size(); ++d) {
      std::vector<long> e(m.size(), 0);
      e[d] = 1;
      bool nzd = true;
      for (const auto& f : vecs) {
        if (std::all_of(f.begin(), f.end(), [](long c) { return c == 0; })) continue;
        const auto p = oracle::dense_mul(m.table(), 2, e, f);
        if (std::all_of(p.begin(), p.end(), [](long c) { return c == 0; })) nzd = false;
      }
      CHECK(monomial_is_nonzerodivisor(Ring::integers_mod(2), m, v1(std::int64_t(d))) == nzd);
    }
  }
}

TEST_CASE("non-zero-divisor detection on ring elements") {
  const MonoidRing t2(Ring::integers_mod(2), truncated_addition(2));
  CHECK(*t2.nonzerodivisor(t2.one()) == true);
  CHECK(*t2.nonzerodivisor(t2.epsilon(v1(2))) == false);
  const MonoidRing zx(Ring::integers(), Monoid::free(1));
  CHECK(*zx.nonzerodivisor(zx.epsilon(v1(2))));
  const MonoidRing z6x(Ring::integers_mod(6), Monoid::free(1));
  CHECK_FALSE(*z6x.nonzerodivisor(z6x.monomial(2, v1(1))));
  CHECK_FALSE(z6x.nonzerodivisor(z6x.from_terms({{1, v1(0)}, {2, v1(1)}})).has_value());
}

TEST_CASE("canonical map into the group ring") {
  const auto t2m = truncated_addition(2);
  const MonoidRing t2(Ring::integers(), t2m);
  const GroupRing<Ring> target(Ring::integers(), GrothendieckGroup(t2m));
  CHECK(canonical_to_group_ring(t2, t2.sub(t2.epsilon(v1(1)), t2.one()), target).is_zero());
  CHECK(canonical_to_group_ring(t2, t2.zero(), target).is_zero());

  const MonoidRing zx(Ring::integers(), Monoid::free(2));
  const GroupRing<Ring> zg(Ring::integers(), GrothendieckGroup(Monoid::free(2)));
  Lcg64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto f = zx.sample(rng, 4), g = zx.sample(rng, 4);
    const auto hf = canonical_to_group_ring(zx, f, zg);
    CHECK(hf.terms.size() == f.support_size());
    CHECK(zg.equal(canonical_to_group_ring(zx, zx.mul(f, g), zg),
                   zg.mul(hf, canonical_to_group_ring(zx, g, zg))));
    CHECK(zg.equal(canonical_to_group_ring(zx, zx.add(f, g), zg),
                   zg.add(hf, canonical_to_group_ring(zx, g, zg))));
  }
}

TEST_CASE("four cancellativity criteria agree on the finite corpus") {
  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup g(m);
    const bool i = m.is_cancellative();
    const bool ii = canonical_map_injective(g);
    for (unsigned long n : {2UL, 6UL}) {
      const auto r = Ring::integers_mod(n);
      bool iii = true;
      for (const auto& d : m.elements()) iii = iii && monomial_is_nonzerodivisor(r, m, d);
      const bool iv = group_ring_map_injective(r, g);
      CHECK(i == ii);
      CHECK(i == iii);
      CHECK(i == iv);
    }
  }
}

TEST_CASE("degrees submonoid") {
  const MonoidRing zx(Ring::integers(), Monoid::free(1));
  const auto evens = degrees_submonoid(zx, {zx.epsilon(v1(2))}, 5);
  CHECK(evens == std::vector<MonoidValue>{v1(0), v1(2), v1(4), v1(6), v1(8), v1(10)});
  CHECK(degrees_submonoid(zx, {zx.one()}) == std::vector<MonoidValue>{v1(0)});
  const auto semigroup = degrees_submonoid(zx, {zx.epsilon(v1(2)), zx.monomial(5, v1(3))}, 8);
  CHECK(std::find(semigroup.begin(), semigroup.end(), v1(1)) == semigroup.end());
  for (std::int64_t k = 2; k <= 16; ++k)
    CHECK(std::find(semigroup.begin(), semigroup.end(), v1(k)) != semigroup.end());
  const MonoidRing t2(Ring::integers(), truncated_addition(2));
  try {
    degrees_submonoid(t2, {t2.epsilon(v1(1))});
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}
