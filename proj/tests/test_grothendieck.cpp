#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "grothring/grothendieck.hpp"
#include "oracles.hpp"

using namespace grothring;

namespace {

MonoidValue v1(std::int64_t x) { return MonoidValue{x}; }

// {0, 1} with 1 + 1 = 1 crossed with ℤ/2: four elements, not cancellative,
// Grothendieck group ℤ/2.
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
          Monoid::direct_sum({truncated_addition(2), cyclic_group(2)}),
          Monoid::direct_sum({cyclic_group(2), cyclic_group(2)})};
}

}  // namespace

TEST_CASE("groth_eq on the basic examples") {
  const GrothendieckGroup n(Monoid::free(1));
  CHECK(n.strategy() == EqStrategy::CancellativeCrossSum);
  CHECK(n.eq({v1(3), v1(1)}, {v1(5), v1(3)}));
  CHECK_FALSE(n.eq({v1(2), v1(0)}, {v1(0), v1(2)}));

  const GrothendieckGroup t2(truncated_addition(2));
  CHECK(t2.strategy() == EqStrategy::FiniteWitness);
  const auto w = t2.witness({v1(1), v1(0)}, {v1(0), v1(0)});
  REQUIRE(w.has_value());
  CHECK(*w == v1(2));
}

TEST_CASE("strategy selection rejects what it cannot decide") {
  CHECK_THROWS_AS(GrothendieckGroup(truncated_addition(2), EqStrategy::CancellativeCrossSum),
                  AlgebraError);
  CHECK_THROWS_AS(GrothendieckGroup(Monoid::free(1), EqStrategy::FiniteWitness), AlgebraError);
  try {
    GrothendieckGroup g(Monoid::direct_sum({truncated_addition(2), Monoid::free(1)}));
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::StrategyUnavailable);
  }
  CHECK(GrothendieckGroup(Monoid::presentation(1, {{{2}, {0}}})).strategy() ==
        EqStrategy::PresentationLattice);
}

TEST_CASE("groth_eq is an equivalence relation") {
  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup g(m);
    const auto els = m.elements();
    std::vector<GrothElement> pairs;
    for (const auto& a : els)
      for (const auto& b : els) pairs.push_back({a, b});
    for (const auto& x : pairs) {
      CHECK(g.eq(x, x));
      for (const auto& y : pairs) {
        const bool xy = g.eq(x, y);
        CHECK(xy == g.eq(y, x));
        if (!xy) continue;
        for (const auto& z : pairs)
          if (g.eq(y, z)) CHECK(g.eq(x, z));
      }
    }
  }
  Lcg64 rng(3);
  const GrothendieckGroup g(Monoid::free(2));
  for (int i = 0; i < 1000; ++i) {
    const auto m = g.base();
    GrothElement x{m.sample(rng), m.sample(rng)};
    const auto shift = m.sample(rng);
    GrothElement y{m.op(x.first, shift), m.op(x.second, shift)};
    const auto shift2 = m.sample(rng);
    GrothElement z{m.op(y.first, shift2), m.op(y.second, shift2)};
    REQUIRE(g.eq(x, y));
    REQUIRE(g.eq(y, z));
    REQUIRE(g.eq(x, z));
  }
}

TEST_CASE("group operations") {
  const GrothendieckGroup n(Monoid::free(1));
  const auto s = n.add({v1(3), v1(1)}, {v1(0), v1(4)});
  CHECK(s == GrothElement{v1(3), v1(5)});
  CHECK(n.eq(s, {v1(0), v1(2)}));
  CHECK(n.neg({v1(3), v1(1)}) == GrothElement{v1(1), v1(3)});

  Lcg64 rng(9);
  for (const auto& m : {Monoid::free(2), truncated_addition(3), nc4()}) {
    const GrothendieckGroup g(m);
    for (int i = 0; i < 100; ++i) {
      const GrothElement x{m.sample(rng), m.sample(rng)};
      const GrothElement y{m.sample(rng), m.sample(rng)};
      const GrothElement z{m.sample(rng), m.sample(rng)};
      CHECK(g.eq(g.add(x, g.neg(x)), g.zero()));
      CHECK(g.eq(g.add(g.zero(), x), x));
      CHECK(g.eq(g.add(x, y), g.add(y, x)));
      CHECK(g.eq(g.add(g.add(x, y), z), g.add(x, g.add(y, z))));
    }
  }
}

TEST_CASE("canonical map") {
  const GrothendieckGroup n(Monoid::free(1));
  CHECK(n.canonical(v1(5)) == GrothElement{v1(5), v1(0)});
  CHECK(n.eq(n.canonical(n.base().identity()), n.zero()));

  const GrothendieckGroup t2(truncated_addition(2));
  CHECK(t2.eq(t2.canonical(v1(1)), t2.zero()));

  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup g(m);
    for (const auto& a : m.elements())
      for (const auto& b : m.elements())
        CHECK(g.eq(g.canonical(m.op(a, b)), g.add(g.canonical(a), g.canonical(b))));
  }
}

TEST_CASE("canonical map injectivity agrees with cancellativity") {
  CHECK(canonical_map_injective(GrothendieckGroup(Monoid::free(2))));
  CHECK_FALSE(canonical_map_injective(GrothendieckGroup(truncated_addition(2))));
  CHECK(canonical_map_injective(GrothendieckGroup(cyclic_group(4))));
  for (const auto& m : finite_corpus())
    CHECK(canonical_map_injective(GrothendieckGroup(m)) == m.is_cancellative());
  CHECK_THROWS_AS(canonical_map_injective(GrothendieckGroup(Monoid::presentation(1, {}))),
                  AlgebraError);
}

TEST_CASE("quasi-zero submonoid is everything exactly when G is trivial") {
  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup g(m);
    const FiniteGrothClasses classes(g);
    CHECK((quasi_zero_submonoid(m).size() == m.size()) == (classes.size() == 1));
  }
}

TEST_CASE("class enumeration matches the table oracle and the SNF structure") {
  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup g(m);
    const FiniteGrothClasses classes(g);
    const auto structure = groth_structure(m);
    REQUIRE(structure.order().has_value());
    CHECK(*structure.order() == static_cast<long>(classes.size()));
    if (m.kind() == MonoidKind::Cayley)
      CHECK(classes.size() == oracle::table_groth_order(m.table()));
    for (const auto& r : classes.representatives()) CHECK(classes.index_of(r) < classes.size());
  }
  CHECK(groth_structure(truncated_addition(2)).order() == mpz_class(1));
  CHECK(groth_structure(nc4()) == FGAbelianStructure{0, {2}});
  CHECK(groth_structure(cyclic_group(6)) == FGAbelianStructure{0, {6}});
}

TEST_CASE("presentation strategy agrees with witness enumeration on finite tables") {
  for (const auto& m : finite_corpus()) {
    const GrothendieckGroup witness(m, EqStrategy::FiniteWitness);
    const GrothendieckGroup lattice(m, EqStrategy::PresentationLattice);
    const auto els = m.elements();
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& c : els)
          CHECK(witness.eq({a, b}, {c, m.identity()}) == lattice.eq({a, b}, {c, m.identity()}));
  }
}

TEST_CASE("universal property") {
  const GrothendieckGroup n(Monoid::free(1));
  const auto z3 = cyclic_group(3);
  const UniversalExtension h(n, z3, [](const MonoidValue& m) { return v1(m[0] % 3); });
  CHECK(h({v1(5), v1(1)}) == v1(1));
  CHECK(h(n.zero()) == z3.identity());
  for (std::int64_t a = 0; a < 10; ++a) CHECK(h(n.canonical(v1(a))) == v1(a % 3));

  // Every monoid morphism T₂ → ℤ/2 is zero (brute force over all maps).
  const auto t2 = truncated_addition(2);
  const auto z2 = cyclic_group(2);
  int morphisms = 0;
  for (int code = 0; code < 8; ++code) {
    auto g = [code](const MonoidValue& m) { return v1((code >> m[0]) & 1); };
    bool ok = g(t2.identity()) == z2.identity();
    for (const auto& a : t2.elements())
      for (const auto& b : t2.elements()) ok = ok && g(t2.op(a, b)) == z2.op(g(a), g(b));
    if (!ok) continue;
    ++morphisms;
    CHECK(code == 0);
    const UniversalExtension ext(GrothendieckGroup(t2), z2, g);
    for (const auto& a : t2.elements())
      for (const auto& b : t2.elements()) CHECK(ext({a, b}) == z2.identity());
  }
  CHECK(morphisms == 1);

  try {
    UniversalExtension bad(n, z3, [](const MonoidValue& m) { return v1(m[0] == 1 ? 1 : 0); });
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("universal extension is the unique group morphism through the canonical map") {
  // M = T₂ ⊕ ℤ/2 (G ≅ ℤ/2), H = ℤ/4, g = projection to ℤ/2 followed by 2·.
  const auto m = Monoid::direct_sum({truncated_addition(2), cyclic_group(2)});
  const auto z4 = cyclic_group(4);
  const GrothendieckGroup g(m);
  auto map = [](const MonoidValue& v) { return v1(2 * v[1]); };
  const UniversalExtension h(g, z4, map);
  const FiniteGrothClasses classes(g);
  const auto& reps = classes.representatives();
  const std::size_t k = reps.size();

  std::size_t count = 0;
  std::vector<std::size_t> assign(k, 0);
  for (std::size_t code = 0; code < static_cast<std::size_t>(std::pow(4, k)); ++code) {
    std::size_t c = code;
    for (auto& a : assign) {
      a = c % 4;
      c /= 4;
    }
    auto hv = [&](const GrothElement& x) { return v1(std::int64_t(assign[classes.index_of(x)])); };
    bool hom = true;
    for (const auto& x : reps)
      for (const auto& y : reps) hom = hom && hv(g.add(x, y)) == z4.op(hv(x), hv(y));
    bool extends = true;
    for (const auto& a : m.elements()) extends = extends && hv(g.canonical(a)) == map(a);
    if (!hom || !extends) continue;
    ++count;
    for (const auto& x : reps) CHECK(hv(x) == h(x));
  }
  CHECK(count == 1);
}

TEST_CASE("groth_of_presentation") {
  const auto s = groth_of_presentation(Monoid::presentation(1, {{{2}, {0}}}));
  CHECK(s == FGAbelianStructure{0, {2}});
  CHECK(FiniteGrothClasses(GrothendieckGroup(cyclic_group(2))).size() == 2);

  CHECK(groth_of_presentation(Monoid::presentation(3, {})) == FGAbelianStructure{3, {}});

  // ⟨a, b | a + b = b⟩ ≅ ℤ; adding 3b = 0 gives the truncated model's group.
  CHECK(groth_of_presentation(Monoid::presentation(2, {{{1, 1}, {0, 1}}})) ==
        FGAbelianStructure{1, {}});
  const auto truncated =
      groth_of_presentation(Monoid::presentation(2, {{{1, 1}, {0, 1}}, {{0, 3}, {0, 0}}}));
  // a = a + 3b = (a + b) + 2b = 3b = 0, so the monoid itself is ℤ/3.
  CHECK(*truncated.order() ==
        static_cast<long>(FiniteGrothClasses(GrothendieckGroup(cyclic_group(3))).size()));
  CHECK(truncated == FGAbelianStructure{0, {3}});

  CHECK_THROWS_AS(groth_of_presentation(Monoid::free(2)), AlgebraError);
}

TEST_CASE("presentation equality via the relation lattice") {
  // ⟨a, b | 3a = 2b⟩: [3a, 0] = [2b, 0] but [a, 0] ≠ [b, 0].
  const GrothendieckGroup g(Monoid::presentation(2, {{{3, 0}, {0, 2}}}));
  CHECK(g.eq({{3, 0}, {0, 0}}, {{0, 2}, {0, 0}}));
  CHECK_FALSE(g.eq({{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}));
  CHECK(g.eq({{0, 3}, {3, 0}}, {{0, 1}, {0, 0}}));  // 3(b - a) = b
}

TEST_CASE("torsion freeness") {
  CHECK(is_torsion_free({2, {}}));
  CHECK_FALSE(is_torsion_free({1, {2}}));
  CHECK(is_torsion_free({0, {}}));
}

TEST_CASE("order transferred from the monoid") {
  const GrothendieckGroup n(Monoid::free(1));
  const auto cmp = order_from_monoid_order(n, integer_lex);
  CHECK(cmp({v1(2), v1(5)}, {v1(3), v1(1)}) == std::strong_ordering::less);
  CHECK(cmp({v1(4), v1(2)}, {v1(4), v1(2)}) == std::strong_ordering::equal);
  CHECK(cmp({v1(7), v1(7)}, {v1(0), v1(0)}) == std::strong_ordering::equal);

  Lcg64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.range(0, 20), b = rng.range(0, 20), c = rng.range(0, 20),
               d = rng.range(0, 20), k = rng.range(0, 9);
    const auto direct = cmp({v1(a), v1(b)}, {v1(c), v1(d)});
    CHECK(direct == cmp({v1(a + k), v1(b + k)}, {v1(c), v1(d)}));
    CHECK(direct == ((a - b) <=> (c - d)));
  }
  try {
    order_from_monoid_order(GrothendieckGroup(truncated_addition(2)), integer_lex);
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("total order on ℤ²") {
  const auto order = build_total_order(Monoid::lattice(2));
  const auto a = order.from_coordinates({0, 1});
  const auto b = order.from_coordinates({1, -100});
  CHECK(order.compare(a, b) == std::strong_ordering::less);
  const auto res = check_total_order(order, 3);
  CHECK(res.ok);
}

TEST_CASE("torsion witness for ℤ ⊕ ℤ/2") {
  // ⟨a, b | 2b = 0⟩
  const auto m = Monoid::presentation(2, {{{0, 2}, {0, 0}}});
  try {
    build_total_order(m);
    FAIL("expected throw");
  } catch (const TorsionError& e) {
    CHECK(e.kind() == ErrorKind::Torsion);
    const auto& w = e.witness();
    CHECK(w.order == 2);
    CHECK(w.coordinates == std::vector<mpz_class>{0, 1});
    const GrothendieckGroup g(m);
    CHECK_FALSE(g.is_zero(w.element));
    CHECK(g.is_zero(g.multiple(w.element, 2)));
  }
}

TEST_CASE("torsion witness on a finite table is checked by witness enumeration") {
  const auto m = cyclic_group(4);
  try {
    build_total_order(m);
    FAIL("expected throw");
  } catch (const TorsionError& e) {
    const GrothendieckGroup g(m, EqStrategy::FiniteWitness);
    const auto& w = e.witness();
    CHECK(w.order == 4);
    for (std::uint64_t n = 1; n < 4; ++n) CHECK_FALSE(g.is_zero(g.multiple(w.element, n)));
    CHECK(g.is_zero(g.multiple(w.element, 4)));
  }
}

TEST_CASE("numerical semigroup ⟨2,3⟩ gets the numeric order") {
  const auto m = Monoid::presentation(2, {{{3, 0}, {0, 2}}});
  const auto order = build_total_order(m);
  CHECK(order.rank() == 1);
  for (std::int64_t i = 0; i < 6; ++i)
    for (std::int64_t j = 0; j < 6; ++j)
      for (std::int64_t k = 0; k < 6; ++k)
        for (std::int64_t l = 0; l < 6; ++l)
          CHECK(order.compare_monoid({i, j}, {k, l}) == ((2 * i + 3 * j) <=> (2 * k + 3 * l)));
  const auto images = order.generator_images();
  REQUIRE(images.size() == 2);
  CHECK(images[0][0] == 2);
  CHECK(images[1][0] == 3);
}

TEST_CASE("direct sums of structures") {
  CHECK(direct_sum_groth({{1, {}}, {1, {}}}) == FGAbelianStructure{2, {}});
  CHECK(direct_sum_groth({{1, {}}, {1, {}}}) ==
        groth_structure(Monoid::direct_sum({Monoid::free(1), Monoid::free(1)})));
  CHECK(direct_sum_groth({}) == FGAbelianStructure{0, {}});

  // ℤ/2 ⊕ ℤ/3: brute-force element orders; a cyclic group of order 6 has an
  // element of order 6.
  std::size_t max_order = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) {
      std::size_t n = 1;
      while ((n * a) % 2 != 0 || (n * b) % 3 != 0) ++n;
      max_order = std::max(max_order, n);
    }
  CHECK(max_order == 6);
  CHECK(direct_sum_groth({{0, {2}}, {0, {3}}}) == FGAbelianStructure{0, {6}});
  CHECK(direct_sum_groth({{0, {2}}, {0, {2}}}) == FGAbelianStructure{0, {2, 2}});
  CHECK(groth_structure(Monoid::direct_sum({cyclic_group(2), cyclic_group(3)})) ==
        FGAbelianStructure{0, {6}});
  // Mixed infinite and finite components use the block-diagonal model.
  CHECK(groth_structure(Monoid::direct_sum({Monoid::free(1), cyclic_group(4), truncated_addition(2)})) ==
        FGAbelianStructure{1, {4}});
}

TEST_CASE("canonical preimage and reduction") {
  const GrothendieckGroup f(Monoid::free(2));
  CHECK(f.reduced({{3, 1}, {1, 4}}) == GrothElement{{2, 0}, {0, 3}});
  CHECK(f.canonical_preimage({{3, 4}, {1, 4}}) == MonoidValue{2, 0});
  CHECK_FALSE(f.canonical_preimage({{0, 0}, {1, 0}}).has_value());
  const GrothendieckGroup t2(truncated_addition(2));
  CHECK(t2.canonical_preimage({v1(0), v1(1)}).has_value());
}
