#include <algorithm>

#include "doctest.h"
#include "grothring/monoid.hpp"
#include "oracles.hpp"

using namespace grothring;

namespace {

std::vector<Monoid> finite_corpus() {
  return {truncated_addition(2), truncated_addition(3), cyclic_group(2), cyclic_group(4),
          multiplicative_residues(6), cyclic_group(6),
          Monoid::direct_sum({truncated_addition(2), cyclic_group(2)})};
}

}  // namespace

TEST_CASE("op on free and truncated monoids") {
  const auto free2 = Monoid::free(2);
  CHECK(free2.op({1, 0}, {0, 3}) == MonoidValue{1, 3});

  // T₂ against a brute-force min(a+b, 2) table.
  const auto t2 = truncated_addition(2);
  const auto ref = oracle::table_of(3, [](std::size_t a, std::size_t b) { return std::min<std::size_t>(a + b, 2); });
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(t2.op({std::int64_t(a)}, {std::int64_t(b)}) == MonoidValue{std::int64_t(ref[a][b])});
  CHECK(t2.op({1}, {2}) == MonoidValue{2});

  for (const auto& m : finite_corpus())
    for (const auto& a : m.elements()) CHECK(m.op(m.identity(), a) == a);
}

TEST_CASE("malformed elements are rejected") {
  const auto t2 = truncated_addition(2);
  CHECK_THROWS_AS(t2.op({3}, {0}), AlgebraError);
  CHECK_THROWS_AS(Monoid::free(2).op({1}, {0, 1}), AlgebraError);
  try {
    Monoid::free(2).check({-1, 0});
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::MalformedElement);
  }
}

TEST_CASE("Cayley tables are validated at construction") {
  // Not associative: a non-trivial idempotent-free table.
  std::vector<std::vector<std::size_t>> bad{{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  try {
    Monoid::cayley(bad, 0);
    FAIL("expected throw");
  } catch (const AxiomViolationError& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
    CHECK(e.axiom() == "associativity");
  }
  std::vector<std::vector<std::size_t>> noncomm{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Monoid::cayley(noncomm, 0), AxiomViolationError);
  CHECK_THROWS_AS(Monoid::cayley({{0, 1}, {1, 1}}, 1), AxiomViolationError);  // 1 is not an identity
}

TEST_CASE("is_cancellative") {
  CHECK(Monoid::free(3).is_cancellative());
  CHECK_FALSE(truncated_addition(2).is_cancellative());
  CHECK(truncated_addition(2).op({1}, {2}) == truncated_addition(2).op({0}, {2}));
  CHECK(cyclic_group(4).is_cancellative());
  CHECK_THROWS_AS(Monoid::presentation(1, {{{2}, {0}}}).is_cancellative(), AlgebraError);

  for (const auto& m : finite_corpus()) {
    if (m.kind() != MonoidKind::Cayley) continue;
    CHECK(m.is_cancellative() == oracle::table_cancellative(m.table()));
  }
  // Direct sums are cancellative iff every component is.
  CHECK(Monoid::direct_sum({cyclic_group(2), Monoid::free(1)}).is_cancellative());
  CHECK_FALSE(Monoid::direct_sum({cyclic_group(2), truncated_addition(2)}).is_cancellative());
}

TEST_CASE("quasi-zero submonoid") {
  CHECK(quasi_zero_submonoid(truncated_addition(2)).size() == 3);
  const auto z4 = quasi_zero_submonoid(cyclic_group(4));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0] == MonoidValue{0});
  CHECK(quasi_zero_submonoid(multiplicative_residues(6)).size() == 6);
  for (const auto& m : finite_corpus()) {
    const auto q = quasi_zero_submonoid(m);
    CHECK(std::find(q.begin(), q.end(), m.identity()) != q.end());
  }
}

TEST_CASE("monoid axioms hold on every constructed monoid") {
  for (const auto& m : finite_corpus()) {
    const auto els = m.elements();
    for (const auto& a : els)
      for (const auto& b : els) {
        CHECK(m.op(a, b) == m.op(b, a));
        for (const auto& c : els) CHECK(m.op(m.op(a, b), c) == m.op(a, m.op(b, c)));
      }
  }
  Lcg64 rng(11);
  for (const auto& m : {Monoid::free(3), Monoid::lattice(2),
                        Monoid::direct_sum({Monoid::free(1), cyclic_group(3)})}) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = m.sample(rng), b = m.sample(rng), c = m.sample(rng);
      REQUIRE(m.op(a, b) == m.op(b, a));
      REQUIRE(m.op(m.op(a, b), c) == m.op(a, m.op(b, c)));
      REQUIRE(m.op(m.identity(), a) == a);
    }
  }
}

TEST_CASE("direct sum elements and indexing") {
  const auto s = Monoid::direct_sum({truncated_addition(2), cyclic_group(2)});
  CHECK(s.size() == 6);
  const auto els = s.elements();
  CHECK(std::is_sorted(els.begin(), els.end()));
  for (std::size_t i = 0; i < els.size(); ++i) CHECK(s.index_of(els[i]) == i);
  CHECK(s.op({1, 1}, {2, 1}) == MonoidValue{2, 0});
  CHECK(s.identity() == MonoidValue{0, 0});
}

TEST_CASE("lexicographic comparison") {
  const auto z2 = Monoid::direct_sum({Monoid::lattice(1), Monoid::lattice(1)});
  const std::vector<Comparator> orders{integer_lex, integer_lex};
  CHECK(lex_compare(z2, orders, {1, 5}, {2, -10}) == std::strong_ordering::less);
  CHECK(lex_compare(z2, orders, {3, 1}, {3, 4}) == std::strong_ordering::less);
  CHECK(lex_compare(z2, orders, {3, 4}, {3, 4}) == std::strong_ordering::equal);
  const std::vector<Comparator> partial{integer_lex};
  try {
    lex_compare(z2, partial, {0, 0}, {0, 1});
    FAIL("expected throw");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::MissingOrder);
  }
}

TEST_CASE("order compatibility checks") {
  const OrderedMonoid naturals{Monoid::free(1), integer_lex};
  CHECK(check_order_compatible(naturals, 2000, 1).ok);

  const auto z2 = Monoid::direct_sum({Monoid::lattice(1), Monoid::lattice(1)});
  const OrderedMonoid lex2{z2, lex_order(z2, {integer_lex, integer_lex})};
  const auto box = integer_box(2, -3, 3);
  const auto exhaustive = check_order_on(lex2, box);
  CHECK(exhaustive.ok);
  CHECK(exhaustive.triples_checked > 0);

  // Reversed order on ℕ with 0 kept least: total, but 0 < 1 while 1 > 2.
  const Comparator broken = [](const MonoidValue& a, const MonoidValue& b) {
    if (a == b) return std::strong_ordering::equal;
    if (a[0] == 0) return std::strong_ordering::less;
    if (b[0] == 0) return std::strong_ordering::greater;
    return b[0] <=> a[0];
  };
  const auto res = check_order_compatible({Monoid::free(1), broken}, 2000, 3);
  CHECK_FALSE(res.ok);
  REQUIRE(res.violation.has_value());
  CHECK(res.violation->law == "compatibility");
  const auto& v = *res.violation;
  const auto& m = naturals.monoid;
  CHECK(broken(v.a, v.b) < 0);
  CHECK(broken(m.op(v.a, v.c), m.op(v.b, v.c)) > 0);
}

TEST_CASE("lexicographic order on ℤ³ is total and compatible on a box") {
  const auto z3 = Monoid::lattice(3);
  const auto box = integer_box(3, -2, 2);
  CHECK(check_order_on({z3, integer_lex}, box).ok);
}

TEST_CASE("non-total comparator is reported") {
  const Comparator everything_equal = [](const MonoidValue&, const MonoidValue&) {
    return std::strong_ordering::equal;
  };
  const auto res = check_order_on({cyclic_group(3), everything_equal}, cyclic_group(3).elements());
  CHECK_FALSE(res.ok);
  CHECK(res.violation->law == "totality");
}
