#include "grothring/monoid.hpp"

#include <algorithm>
#include <sstream>

namespace grothring {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedElement: return "malformed-element";
    case ErrorKind::UnsupportedFamily: return "unsupported-family";
    case ErrorKind::MissingOrder: return "missing-order";
    case ErrorKind::StrategyUnavailable: return "strategy-unavailable";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotHomogeneous: return "not-homogeneous";
    case ErrorKind::ZeroHasNoDegree: return "zero-has-no-degree";
    case ErrorKind::UndecidableConfiguration: return "undecidable-configuration";
    case ErrorKind::OracleRequired: return "oracle-required";
    case ErrorKind::MalformedDenominator: return "malformed-denominator";
    case ErrorKind::BaseMismatch: return "base-mismatch";
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::Torsion: return "torsion";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

const char* to_string(MonoidKind kind) noexcept {
  switch (kind) {
    case MonoidKind::Cayley: return "cayley";
    case MonoidKind::Free: return "free";
    case MonoidKind::Lattice: return "lattice";
    case MonoidKind::Presentation: return "presentation";
    case MonoidKind::DirectSum: return "direct_sum";
  }
  return "unknown";
}

std::string to_string(const MonoidValue& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.parts.size(); ++i) {
    if (i) os << ',';
    os << v.parts[i];
  }
  os << ')';
  return os.str();
}

AxiomViolationError::AxiomViolationError(std::string axiom, std::array<std::size_t, 3> triple)
    : AlgebraError(ErrorKind::AxiomViolation,
                   axiom + " fails at (" + std::to_string(triple[0]) + "," +
                       std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")"),
      axiom_(std::move(axiom)),
      triple_(triple) {}

namespace detail {

struct MonoidData {
  MonoidKind kind{};
  std::size_t width = 0;
  // Cayley
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  // Free / Lattice / Presentation
  std::size_t rank = 0;
  std::vector<Relation> relations;
  // DirectSum
  std::vector<Monoid> components;
  std::vector<std::size_t> offsets;
};

}  // namespace detail

namespace {

[[noreturn]] void malformed(const MonoidValue& v, const std::string& why) {
  throw AlgebraError(ErrorKind::MalformedElement, "malformed element " + to_string(v) + ": " + why);
}

void validate_table(const std::vector<std::vector<std::size_t>>& t, std::size_t e) {
  const std::size_t n = t.size();
  if (n == 0) throw AlgebraError(ErrorKind::InvalidInput, "Cayley table must be non-empty");
  if (e >= n) throw AxiomViolationError("identity index in range", {e, 0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n)
      throw AlgebraError(ErrorKind::InvalidInput, "Cayley table must be square");
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] >= n) throw AxiomViolationError("closure", {i, j, 0});
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t[e][i] != i) throw AxiomViolationError("identity", {e, i, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i][j] != t[j][i]) throw AxiomViolationError("commutativity", {i, j, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) throw AxiomViolationError("associativity", {i, j, k});
}

}  // namespace

Monoid Monoid::cayley(std::vector<std::vector<std::size_t>> table, std::size_t identity) {
  validate_table(table, identity);
  auto d = std::make_shared<detail::MonoidData>();
  d->kind = MonoidKind::Cayley;
  d->width = 1;
  d->table = std::move(table);
  d->identity = identity;
  return Monoid(std::move(d));
}

Monoid Monoid::free(std::size_t rank) {
  auto d = std::make_shared<detail::MonoidData>();
  d->kind = MonoidKind::Free;
  d->width = rank;
  d->rank = rank;
  return Monoid(std::move(d));
}

Monoid Monoid::lattice(std::size_t rank) {
  auto d = std::make_shared<detail::MonoidData>();
  d->kind = MonoidKind::Lattice;
  d->width = rank;
  d->rank = rank;
  return Monoid(std::move(d));
}

Monoid Monoid::presentation(std::size_t generators, std::vector<Relation> relations) {
  for (const auto& r : relations) {
    if (r.lhs.size() != generators || r.rhs.size() != generators)
      throw AlgebraError(ErrorKind::InvalidInput, "relation length must equal generator count");
    for (std::size_t i = 0; i < generators; ++i)
      if (r.lhs[i] < 0 || r.rhs[i] < 0)
        throw AlgebraError(ErrorKind::InvalidInput, "relation exponents must be natural numbers");
  }
  auto d = std::make_shared<detail::MonoidData>();
  d->kind = MonoidKind::Presentation;
  d->width = generators;
  d->rank = generators;
  d->relations = std::move(relations);
  return Monoid(std::move(d));
}

Monoid Monoid::direct_sum(std::vector<Monoid> components) {
  auto d = std::make_shared<detail::MonoidData>();
  d->kind = MonoidKind::DirectSum;
  std::size_t offset = 0;
  for (const auto& c : components) {
    if (c.kind() == MonoidKind::Presentation)
      throw AlgebraError(ErrorKind::UnsupportedFamily,
                         "presented monoids cannot be direct-sum components");
    d->offsets.push_back(offset);
    offset += c.width();
  }
  d->width = offset;
  d->components = std::move(components);
  return Monoid(std::move(d));
}

MonoidKind Monoid::kind() const noexcept { return data_->kind; }
std::size_t Monoid::width() const noexcept { return data_->width; }

MonoidValue Monoid::identity() const {
  switch (data_->kind) {
    case MonoidKind::Cayley:
      return MonoidValue{static_cast<std::int64_t>(data_->identity)};
    case MonoidKind::DirectSum: {
      MonoidValue out;
      out.parts.reserve(data_->width);
      for (const auto& c : data_->components) {
        auto e = c.identity();
        out.parts.insert(out.parts.end(), e.parts.begin(), e.parts.end());
      }
      return out;
    }
    default:
      return MonoidValue(std::vector<std::int64_t>(data_->width, 0));
  }
}

MonoidValue Monoid::op(const MonoidValue& a, const MonoidValue& b) const {
  if (a.size() != data_->width) malformed(a, "wrong length");
  if (b.size() != data_->width) malformed(b, "wrong length");
  switch (data_->kind) {
    case MonoidKind::Cayley: {
      const auto n = static_cast<std::int64_t>(data_->table.size());
      if (a[0] < 0 || a[0] >= n) malformed(a, "index out of range");
      if (b[0] < 0 || b[0] >= n) malformed(b, "index out of range");
      return MonoidValue{static_cast<std::int64_t>(
          data_->table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])])};
    }
    case MonoidKind::DirectSum: {
      MonoidValue out;
      out.parts.reserve(data_->width);
      for (std::size_t i = 0; i < data_->components.size(); ++i) {
        auto part = data_->components[i].op(component_part(a, i), component_part(b, i));
        out.parts.insert(out.parts.end(), part.parts.begin(), part.parts.end());
      }
      return out;
    }
    default: {
      MonoidValue out(std::vector<std::int64_t>(data_->width));
      for (std::size_t i = 0; i < data_->width; ++i) out.parts[i] = a[i] + b[i];
      return out;
    }
  }
}

MonoidValue Monoid::multiple(const MonoidValue& a, std::uint64_t n) const {
  MonoidValue acc = identity();
  MonoidValue base = a;
  while (n) {
    if (n & 1u) acc = op(acc, base);
    n >>= 1;
    if (n) base = op(base, base);
  }
  return acc;
}

bool Monoid::contains(const MonoidValue& v) const noexcept {
  if (v.size() != data_->width) return false;
  switch (data_->kind) {
    case MonoidKind::Cayley:
      return v[0] >= 0 && v[0] < static_cast<std::int64_t>(data_->table.size());
    case MonoidKind::Lattice:
      return true;
    case MonoidKind::DirectSum:
      for (std::size_t i = 0; i < data_->components.size(); ++i)
        if (!data_->components[i].contains(component_part(v, i))) return false;
      return true;
    default:
      return std::all_of(v.parts.begin(), v.parts.end(), [](std::int64_t x) { return x >= 0; });
  }
}

void Monoid::check(const MonoidValue& v) const {
  if (v.size() != data_->width) malformed(v, "expected length " + std::to_string(data_->width));
  if (!contains(v)) malformed(v, std::string("not an element of the ") + to_string(kind()) + " monoid");
}

bool Monoid::equal(const MonoidValue& a, const MonoidValue& b) const {
  if (data_->kind == MonoidKind::Presentation)
    throw AlgebraError(ErrorKind::UnsupportedFamily,
                       "element equality is not decided for presented monoids");
  return a == b;
}

bool Monoid::is_finite() const noexcept {
  switch (data_->kind) {
    case MonoidKind::Cayley: return true;
    case MonoidKind::DirectSum:
      return std::all_of(data_->components.begin(), data_->components.end(),
                         [](const Monoid& c) { return c.is_finite(); });
    default: return data_->width == 0;
  }
}

std::size_t Monoid::size() const {
  if (!is_finite()) throw AlgebraError(ErrorKind::UnsupportedFamily, "monoid is infinite");
  switch (data_->kind) {
    case MonoidKind::Cayley: return data_->table.size();
    case MonoidKind::DirectSum: {
      std::size_t n = 1;
      for (const auto& c : data_->components) n *= c.size();
      return n;
    }
    default: return 1;
  }
}

std::vector<MonoidValue> Monoid::elements() const {
  if (!is_finite()) throw AlgebraError(ErrorKind::UnsupportedFamily, "monoid is infinite");
  switch (data_->kind) {
    case MonoidKind::Cayley: {
      std::vector<MonoidValue> out;
      for (std::size_t i = 0; i < data_->table.size(); ++i)
        out.push_back(MonoidValue{static_cast<std::int64_t>(i)});
      return out;
    }
    case MonoidKind::DirectSum: {
      std::vector<MonoidValue> out{MonoidValue{}};
      for (const auto& c : data_->components) {
        const auto parts = c.elements();
        std::vector<MonoidValue> next;
        next.reserve(out.size() * parts.size());
        for (const auto& prefix : out)
          for (const auto& p : parts) {
            MonoidValue v = prefix;
            v.parts.insert(v.parts.end(), p.parts.begin(), p.parts.end());
            next.push_back(std::move(v));
          }
        out = std::move(next);
      }
      return out;
    }
    default:
      return {identity()};
  }
}

std::size_t Monoid::index_of(const MonoidValue& v) const {
  check(v);
  if (!is_finite()) throw AlgebraError(ErrorKind::UnsupportedFamily, "monoid is infinite");
  switch (data_->kind) {
    case MonoidKind::Cayley: return static_cast<std::size_t>(v[0]);
    case MonoidKind::DirectSum: {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < data_->components.size(); ++i) {
        const auto& c = data_->components[i];
        idx = idx * c.size() + c.index_of(component_part(v, i));
      }
      return idx;
    }
    default: return 0;
  }
}

std::vector<MonoidValue> Monoid::generators() const {
  std::vector<MonoidValue> out;
  switch (data_->kind) {
    case MonoidKind::Cayley:
      for (std::size_t i = 0; i < data_->table.size(); ++i)
        if (i != data_->identity) out.push_back(MonoidValue{static_cast<std::int64_t>(i)});
      break;
    case MonoidKind::Free:
    case MonoidKind::Presentation:
    case MonoidKind::Lattice:
      for (std::size_t i = 0; i < data_->width; ++i) {
        MonoidValue e(std::vector<std::int64_t>(data_->width, 0));
        e.parts[i] = 1;
        out.push_back(e);
        if (data_->kind == MonoidKind::Lattice) {
          e.parts[i] = -1;
          out.push_back(e);
        }
      }
      break;
    case MonoidKind::DirectSum: {
      const MonoidValue id = identity();
      for (std::size_t i = 0; i < data_->components.size(); ++i)
        for (const auto& g : data_->components[i].generators()) {
          MonoidValue v = id;
          std::copy(g.parts.begin(), g.parts.end(),
                    v.parts.begin() + static_cast<std::ptrdiff_t>(data_->offsets[i]));
          out.push_back(std::move(v));
        }
      break;
    }
  }
  return out;
}

bool Monoid::is_cancellative() const {
  switch (data_->kind) {
    case MonoidKind::Free:
    case MonoidKind::Lattice:
      return true;
    case MonoidKind::Presentation:
      throw AlgebraError(ErrorKind::UnsupportedFamily,
                         "cancellativity is not decided for presented monoids");
    case MonoidKind::DirectSum:
      return std::all_of(data_->components.begin(), data_->components.end(),
                         [](const Monoid& c) { return c.is_cancellative(); });
    case MonoidKind::Cayley: {
      // a + c = b + c with a ≠ b means translation by c is not injective.
      const auto& t = data_->table;
      const std::size_t n = t.size();
      std::vector<char> seen(n);
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
          if (seen[t[a][c]]) return false;
          seen[t[a][c]] = 1;
        }
      }
      return true;
    }
  }
  return false;
}

bool Monoid::is_group() const {
  switch (data_->kind) {
    case MonoidKind::Lattice: return true;
    case MonoidKind::Free: return data_->width == 0;
    case MonoidKind::Presentation:
      throw AlgebraError(ErrorKind::UnsupportedFamily, "not decided for presented monoids");
    case MonoidKind::DirectSum:
      return std::all_of(data_->components.begin(), data_->components.end(),
                         [](const Monoid& c) { return c.is_group(); });
    case MonoidKind::Cayley: {
      const auto& t = data_->table;
      for (std::size_t a = 0; a < t.size(); ++a)
        if (std::find(t[a].begin(), t[a].end(), data_->identity) == t[a].end()) return false;
      return true;
    }
  }
  return false;
}

MonoidValue Monoid::sample(Lcg64& rng, std::int64_t bound) const {
  switch (data_->kind) {
    case MonoidKind::Cayley:
      return MonoidValue{static_cast<std::int64_t>(rng.below(data_->table.size()))};
    case MonoidKind::DirectSum: {
      MonoidValue out;
      for (const auto& c : data_->components) {
        auto p = c.sample(rng, bound);
        out.parts.insert(out.parts.end(), p.parts.begin(), p.parts.end());
      }
      return out;
    }
    case MonoidKind::Lattice: {
      MonoidValue out(std::vector<std::int64_t>(data_->width));
      for (auto& x : out.parts) x = rng.range(-bound, bound);
      return out;
    }
    default: {
      MonoidValue out(std::vector<std::int64_t>(data_->width));
      for (auto& x : out.parts) x = rng.range(0, bound);
      return out;
    }
  }
}

const std::vector<std::vector<std::size_t>>& Monoid::table() const {
  if (data_->kind != MonoidKind::Cayley)
    throw AlgebraError(ErrorKind::UnsupportedFamily, "not a Cayley monoid");
  return data_->table;
}

std::size_t Monoid::table_identity() const {
  if (data_->kind != MonoidKind::Cayley)
    throw AlgebraError(ErrorKind::UnsupportedFamily, "not a Cayley monoid");
  return data_->identity;
}

std::size_t Monoid::rank() const { return data_->rank; }

const std::vector<Relation>& Monoid::relations() const { return data_->relations; }

const std::vector<Monoid>& Monoid::components() const { return data_->components; }

std::size_t Monoid::component_offset(std::size_t i) const { return data_->offsets.at(i); }

MonoidValue Monoid::component_part(const MonoidValue& v, std::size_t i) const {
  const auto begin = static_cast<std::ptrdiff_t>(data_->offsets.at(i));
  const auto len = static_cast<std::ptrdiff_t>(data_->components[i].width());
  return MonoidValue(std::vector<std::int64_t>(v.parts.begin() + begin, v.parts.begin() + begin + len));
}

bool operator==(const Monoid& a, const Monoid& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  if (x.kind != y.kind || x.width != y.width) return false;
  switch (x.kind) {
    case MonoidKind::Cayley: return x.identity == y.identity && x.table == y.table;
    case MonoidKind::Free:
    case MonoidKind::Lattice: return true;
    case MonoidKind::Presentation: {
      if (x.relations.size() != y.relations.size()) return false;
      for (std::size_t i = 0; i < x.relations.size(); ++i)
        if (x.relations[i].lhs != y.relations[i].lhs || x.relations[i].rhs != y.relations[i].rhs)
          return false;
      return true;
    }
    case MonoidKind::DirectSum: return x.components == y.components;
  }
  return false;
}

Monoid truncated_addition(std::size_t cap) {
  std::vector<std::vector<std::size_t>> t(cap + 1, std::vector<std::size_t>(cap + 1));
  for (std::size_t a = 0; a <= cap; ++a)
    for (std::size_t b = 0; b <= cap; ++b) t[a][b] = std::min(a + b, cap);
  return Monoid::cayley(std::move(t), 0);
}

Monoid cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Monoid::cayley(std::move(t), 0);
}

Monoid multiplicative_residues(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a * b) % n;
  return Monoid::cayley(std::move(t), n > 1 ? 1 : 0);
}

std::vector<MonoidValue> quasi_zero_submonoid(const Monoid& m) {
  const auto elems = m.elements();
  std::vector<MonoidValue> out;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (m.op(x, y) == y) {
        out.push_back(x);
        break;
      }
  return out;
}

std::strong_ordering integer_lex(const MonoidValue& a, const MonoidValue& b) {
  return a.parts <=> b.parts;
}

std::strong_ordering lex_compare(const Monoid& sum, std::span<const Comparator> orders,
                                 const MonoidValue& a, const MonoidValue& b) {
  if (sum.kind() != MonoidKind::DirectSum)
    throw AlgebraError(ErrorKind::UnsupportedFamily, "lexicographic order needs a direct sum");
  const auto n = sum.components().size();
  for (std::size_t i = 0; i < n; ++i)
    if (i >= orders.size() || !orders[i])
      throw AlgebraError(ErrorKind::MissingOrder,
                         "component " + std::to_string(i) + " carries no order");
  sum.check(a);
  sum.check(b);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pa = sum.component_part(a, i);
    const auto pb = sum.component_part(b, i);
    if (pa == pb) continue;
    return orders[i](pa, pb);
  }
  return std::strong_ordering::equal;
}

Comparator lex_order(const Monoid& sum, std::vector<Comparator> orders) {
  // Fail at construction rather than on first use.
  for (std::size_t i = 0; i < sum.components().size(); ++i)
    if (i >= orders.size() || !orders[i])
      throw AlgebraError(ErrorKind::MissingOrder,
                         "component " + std::to_string(i) + " carries no order");
  return [sum, orders = std::move(orders)](const MonoidValue& a, const MonoidValue& b) {
    return lex_compare(sum, orders, a, b);
  };
}

namespace {

bool antisymmetric(const Comparator& cmp, const MonoidValue& a, const MonoidValue& b) {
  const auto ab = cmp(a, b);
  const auto ba = cmp(b, a);
  if (a == b) return ab == std::strong_ordering::equal && ba == std::strong_ordering::equal;
  if (ab == std::strong_ordering::equal) return false;
  return (ab < 0) == (ba > 0);
}

bool transitive(const Comparator& cmp, const MonoidValue& a, const MonoidValue& b,
                const MonoidValue& c) {
  if (cmp(a, b) < 0 && cmp(b, c) < 0) return cmp(a, c) < 0;
  return true;
}

bool compatible(const Comparator& cmp, bool strict, const MonoidValue& ac, const MonoidValue& bc) {
  const auto r = cmp(ac, bc);
  return strict ? r < 0 : r <= 0;
}

bool safe_cancellative(const Monoid& m) {
  try {
    return m.is_cancellative();
  } catch (const AlgebraError&) {
    return false;
  }
}

}  // namespace

OrderCheck check_order_on(const OrderedMonoid& om, std::span<const MonoidValue> elements) {
  OrderCheck result;
  const auto& cmp = om.compare;
  const auto& m = om.monoid;
  const bool strict = safe_cancellative(m);
  const std::size_t n = elements.size();

  // Totality and antisymmetry on pairs; also collect strict-below counts.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && !antisymmetric(cmp, elements[i], elements[j])) {
        result.ok = false;
        result.violation = OrderViolation{"totality", elements[i], elements[j], elements[j]};
        return result;
      }
      if (cmp(elements[j], elements[i]) < 0) ++below[i];
    }
  // A total antisymmetric relation is transitive iff the below-counts are a
  // permutation of 0..n-1 (distinct elements assumed).
  {
    std::vector<std::size_t> sorted = below;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) {
        // Locate an explicit cyclic triple for the report.
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
              if (!transitive(cmp, elements[a], elements[b], elements[c])) {
                result.ok = false;
                result.violation =
                    OrderViolation{"transitivity", elements[a], elements[b], elements[c]};
                return result;
              }
        result.ok = false;
        result.violation = OrderViolation{"transitivity", elements[0], elements[0], elements[0]};
        return result;
      }
  }

  // Compatibility: a < b implies a + c ≤ b + c (strict for cancellative).
  std::vector<MonoidValue> sums(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) sums[i * n + k] = m.op(elements[i], elements[k]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cmp(elements[i], elements[j]) < 0)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++result.triples_checked;
        if (!compatible(cmp, strict, sums[i * n + k], sums[j * n + k])) {
          result.ok = false;
          result.violation = OrderViolation{"compatibility", elements[i], elements[j], elements[k]};
          return result;
        }
      }
    }
  return result;
}

OrderCheck check_order_compatible(const OrderedMonoid& om, std::size_t sample_budget,
                                  std::uint64_t seed, std::int64_t sample_bound) {
  const auto& m = om.monoid;
  if (m.is_finite()) {
    const auto elems = m.elements();
    return check_order_on(om, elems);
  }
  OrderCheck result;
  const bool strict = safe_cancellative(m);
  const auto& cmp = om.compare;
  Lcg64 rng(seed);
  for (std::size_t t = 0; t < sample_budget; ++t) {
    const auto a = m.sample(rng, sample_bound);
    const auto b = m.sample(rng, sample_bound);
    const auto c = m.sample(rng, sample_bound);
    ++result.triples_checked;
    auto fail = [&](const char* law, const MonoidValue& x, const MonoidValue& y,
                    const MonoidValue& z) {
      result.ok = false;
      result.violation = OrderViolation{law, x, y, z};
      return result;
    };
    if (!antisymmetric(cmp, a, b)) return fail("totality", a, b, c);
    if (!transitive(cmp, a, b, c) || !transitive(cmp, c, b, a)) return fail("transitivity", a, b, c);
    if (cmp(a, b) < 0 && !compatible(cmp, strict, m.op(a, c), m.op(b, c)))
      return fail("compatibility", a, b, c);
    if (cmp(b, a) < 0 && !compatible(cmp, strict, m.op(b, c), m.op(a, c)))
      return fail("compatibility", b, a, c);
  }
  return result;
}

std::vector<MonoidValue> integer_box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<MonoidValue> out{MonoidValue{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<MonoidValue> next;
    for (const auto& prefix : out)
      for (std::int64_t x = lo; x <= hi; ++x) {
        MonoidValue v = prefix;
        v.parts.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace grothring
