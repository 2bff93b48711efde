#include "grothring/grothendieck.hpp"

#include <algorithm>
#include <sstream>

namespace grothring {

std::string to_string(const GrothElement& x) {
  return "[" + to_string(x.first) + "," + to_string(x.second) + "]";
}

const char* to_string(EqStrategy s) noexcept {
  switch (s) {
    case EqStrategy::CancellativeCrossSum: return "cancellative-cross-sum";
    case EqStrategy::FiniteWitness: return "finite-witness-enumeration";
    case EqStrategy::PresentationLattice: return "presentation-lattice";
  }
  return "unknown";
}

std::optional<mpz_class> FGAbelianStructure::order() const {
  if (free_rank > 0) return std::nullopt;
  mpz_class n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string to_string(const FGAbelianStructure& s) {
  std::ostringstream os;
  os << "Z^" << s.free_rank;
  for (const auto& d : s.torsion) os << " + Z/" << d.get_str();
  return os.str();
}

bool is_torsion_free(const FGAbelianStructure& s) noexcept { return s.torsion.empty(); }

FGAbelianStructure direct_sum_groth(const std::vector<FGAbelianStructure>& components) {
  FGAbelianStructure out;
  std::vector<mpz_class> cyclic;
  for (const auto& c : components) {
    out.free_rank += c.free_rank;
    cyclic.insert(cyclic.end(), c.torsion.begin(), c.torsion.end());
  }
  IntMatrix diag(cyclic.size(), cyclic.size());
  for (std::size_t i = 0; i < cyclic.size(); ++i) diag(i, i) = cyclic[i];
  for (const auto& d : smith_normal_form(diag).invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// PresentedGroup

PresentedGroup::PresentedGroup(std::size_t generators,
                               const std::vector<std::vector<mpz_class>>& relation_rows)
    : generators_(generators) {
  IntMatrix a(relation_rows.size(), generators);
  for (std::size_t r = 0; r < relation_rows.size(); ++r) {
    if (relation_rows[r].size() != generators)
      throw AlgebraError(ErrorKind::InvalidInput, "relation row length must equal generator count");
    for (std::size_t c = 0; c < generators; ++c) a(r, c) = relation_rows[r][c];
  }
  snf_ = smith_normal_form(a);
  for (std::size_t j = 0; j < snf_.rank(); ++j)
    if (snf_.invariant_factors[j] > 1) torsion_slots_.push_back(j);
  for (std::size_t j = snf_.rank(); j < generators; ++j) free_slots_.push_back(j);
}

FGAbelianStructure PresentedGroup::structure() const {
  FGAbelianStructure s;
  s.free_rank = free_slots_.size();
  for (auto j : torsion_slots_) s.torsion.push_back(snf_.invariant_factors[j]);
  return s;
}

std::vector<mpz_class> PresentedGroup::free_coordinates(const std::vector<mpz_class>& x) const {
  const auto w = row_times(x, snf_.V);
  std::vector<mpz_class> out;
  out.reserve(free_slots_.size());
  for (auto j : free_slots_) out.push_back(w[j]);
  return out;
}

std::vector<mpz_class> PresentedGroup::torsion_coordinates(const std::vector<mpz_class>& x) const {
  const auto w = row_times(x, snf_.V);
  std::vector<mpz_class> out;
  for (auto j : torsion_slots_) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), w[j].get_mpz_t(), snf_.invariant_factors[j].get_mpz_t());
    out.push_back(r);
  }
  return out;
}

bool PresentedGroup::is_zero(const std::vector<mpz_class>& x) const {
  const auto w = row_times(x, snf_.V);
  for (std::size_t j = 0; j < generators_; ++j) {
    if (j < snf_.rank()) {
      if (w[j] % snf_.invariant_factors[j] != 0) return false;
    } else if (w[j] != 0) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<mpz_class> matrix_row(const IntMatrix& m, std::size_t r) {
  std::vector<mpz_class> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m(r, c);
  return out;
}

}  // namespace

std::vector<mpz_class> PresentedGroup::free_basis_vector(std::size_t j) const {
  return matrix_row(snf_.V_inverse, free_slots_.at(j));
}

std::vector<mpz_class> PresentedGroup::torsion_basis_vector(std::size_t j) const {
  return matrix_row(snf_.V_inverse, torsion_slots_.at(j));
}

// ---------------------------------------------------------------------------
// Presented models

namespace {

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p())
    throw AlgebraError(ErrorKind::InvalidInput, "coefficient exceeds 64-bit range");
  return v.get_si();
}

std::vector<mpz_class> to_mpz(const MonoidValue& v) {
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (auto x : v.parts) out.emplace_back(static_cast<long>(x));
  return out;
}

GrothElement split_signs(const std::vector<mpz_class>& x) {
  GrothElement g;
  for (const auto& c : x) {
    g.first.parts.push_back(c > 0 ? to_int64(c) : 0);
    g.second.parts.push_back(c < 0 ? to_int64(-c) : 0);
  }
  return g;
}

PresentedModel exponent_model(const Monoid& m, std::vector<std::vector<mpz_class>> rows) {
  PresentedModel model{m, std::make_shared<PresentedGroup>(m.width(), rows), {}, {}};
  model.embed = [](const MonoidValue& v) { return to_mpz(v); };
  if (m.kind() == MonoidKind::Lattice) {
    const std::size_t k = m.width();
    model.realize = [k](const std::vector<mpz_class>& x) {
      GrothElement g;
      for (const auto& c : x) g.first.parts.push_back(to_int64(c));
      g.second.parts.assign(k, 0);
      return g;
    };
  } else {
    model.realize = split_signs;
  }
  return model;
}

PresentedModel finite_model(const Monoid& m) {
  const auto elems = m.elements();
  const std::size_t n = elems.size();
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<mpz_class> row(n);
      row[a] += 1;
      row[b] += 1;
      row[m.index_of(m.op(elems[a], elems[b]))] -= 1;
      rows.push_back(std::move(row));
    }
  {
    std::vector<mpz_class> row(n);
    row[m.index_of(m.identity())] = 1;
    rows.push_back(std::move(row));
  }
  PresentedModel model{m, std::make_shared<PresentedGroup>(n, rows), {}, {}};
  model.embed = [m, n](const MonoidValue& v) {
    std::vector<mpz_class> out(n);
    out[m.index_of(v)] = 1;
    return out;
  };
  model.realize = [m, elems](const std::vector<mpz_class>& x) {
    GrothElement g{m.identity(), m.identity()};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0) g.first = m.op(g.first, m.multiple(elems[i], to_int64(x[i])));
      if (x[i] < 0) g.second = m.op(g.second, m.multiple(elems[i], to_int64(-x[i])));
    }
    return g;
  };
  return model;
}

PresentedModel sum_model(const Monoid& m) {
  std::vector<PresentedModel> parts;
  std::vector<std::size_t> gen_offsets;
  std::size_t total = 0;
  for (const auto& c : m.components()) {
    parts.push_back(presented_model(c));
    gen_offsets.push_back(total);
    total += parts.back().group->generators();
  }
  // Block-diagonal relations.
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& snf = parts[i].group->snf();
    // U·A·V = D  ⇒  the rows of D·V⁻¹ span the same lattice as A.
    const IntMatrix basis = snf.D * snf.V_inverse;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      std::vector<mpz_class> row(total);
      bool nonzero = false;
      for (std::size_t c = 0; c < basis.cols(); ++c) {
        row[gen_offsets[i] + c] = basis(r, c);
        nonzero = nonzero || basis(r, c) != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  PresentedModel model{m, std::make_shared<PresentedGroup>(total, rows), {}, {}};
  model.embed = [m, parts, total, gen_offsets](const MonoidValue& v) {
    std::vector<mpz_class> out(total);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto e = parts[i].embed(m.component_part(v, i));
      std::copy(e.begin(), e.end(), out.begin() + static_cast<std::ptrdiff_t>(gen_offsets[i]));
    }
    return out;
  };
  model.realize = [parts, gen_offsets](const std::vector<mpz_class>& x) {
    GrothElement g;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto begin = x.begin() + static_cast<std::ptrdiff_t>(gen_offsets[i]);
      const auto len = static_cast<std::ptrdiff_t>(parts[i].group->generators());
      const auto piece = parts[i].realize(std::vector<mpz_class>(begin, begin + len));
      g.first.parts.insert(g.first.parts.end(), piece.first.parts.begin(), piece.first.parts.end());
      g.second.parts.insert(g.second.parts.end(), piece.second.parts.begin(),
                            piece.second.parts.end());
    }
    return g;
  };
  return model;
}

}  // namespace

std::vector<mpz_class> PresentedModel::embed_class(const GrothElement& x) const {
  auto a = embed(x.first);
  const auto b = embed(x.second);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

PresentedModel presented_model(const Monoid& m) {
  switch (m.kind()) {
    case MonoidKind::Presentation: {
      std::vector<std::vector<mpz_class>> rows;
      for (const auto& r : m.relations()) {
        std::vector<mpz_class> row(m.width());
        for (std::size_t i = 0; i < m.width(); ++i)
          row[i] = static_cast<long>(r.lhs[i] - r.rhs[i]);
        rows.push_back(std::move(row));
      }
      return exponent_model(m, std::move(rows));
    }
    case MonoidKind::Free:
    case MonoidKind::Lattice:
      return exponent_model(m, {});
    case MonoidKind::Cayley:
      return finite_model(m);
    case MonoidKind::DirectSum:
      return m.is_finite() ? finite_model(m) : sum_model(m);
  }
  throw AlgebraError(ErrorKind::UnsupportedFamily, "unknown monoid family");
}

FGAbelianStructure groth_structure(const Monoid& m) {
  return presented_model(m).group->structure();
}

FGAbelianStructure groth_of_presentation(const Monoid& presentation) {
  if (presentation.kind() != MonoidKind::Presentation)
    throw AlgebraError(ErrorKind::UnsupportedFamily, "expected a presented monoid");
  return groth_structure(presentation);
}

// ---------------------------------------------------------------------------
// GrothendieckGroup

namespace {

bool applicable(const Monoid& m, EqStrategy s) {
  switch (s) {
    case EqStrategy::CancellativeCrossSum:
      return m.kind() != MonoidKind::Presentation && m.is_cancellative();
    case EqStrategy::FiniteWitness:
      return m.kind() != MonoidKind::Presentation && m.is_finite();
    case EqStrategy::PresentationLattice:
      return true;
  }
  return false;
}

EqStrategy choose(const Monoid& m) {
  if (m.kind() == MonoidKind::Presentation) return EqStrategy::PresentationLattice;
  if (m.is_cancellative()) return EqStrategy::CancellativeCrossSum;
  if (m.is_finite()) return EqStrategy::FiniteWitness;
  throw AlgebraError(ErrorKind::StrategyUnavailable,
                     "no equality strategy for an infinite non-cancellative monoid");
}

}  // namespace

GrothendieckGroup::GrothendieckGroup(Monoid base) : GrothendieckGroup(base, choose(base)) {}

GrothendieckGroup::GrothendieckGroup(Monoid base, EqStrategy strategy)
    : base_(std::move(base)), strategy_(strategy) {
  if (!applicable(base_, strategy_))
    throw AlgebraError(ErrorKind::StrategyUnavailable,
                       std::string("strategy ") + to_string(strategy_) + " does not apply to a " +
                           to_string(base_.kind()) + " monoid");
  if (strategy_ == EqStrategy::FiniteWitness) elements_ = base_.elements();
  if (strategy_ == EqStrategy::PresentationLattice)
    model_ = std::make_shared<const PresentedModel>(presented_model(base_));
}

void GrothendieckGroup::check(const GrothElement& x) const {
  base_.check(x.first);
  base_.check(x.second);
}

std::optional<MonoidValue> GrothendieckGroup::witness(const GrothElement& x,
                                                      const GrothElement& y) const {
  check(x);
  check(y);
  const auto lhs = base_.op(x.first, y.second);
  const auto rhs = base_.op(x.second, y.first);
  switch (strategy_) {
    case EqStrategy::CancellativeCrossSum:
      if (lhs == rhs) return base_.identity();
      return std::nullopt;
    case EqStrategy::FiniteWitness:
      for (const auto& m : elements_)
        if (base_.op(lhs, m) == base_.op(rhs, m)) return m;
      return std::nullopt;
    case EqStrategy::PresentationLattice:
      return std::nullopt;
  }
  return std::nullopt;
}

bool GrothendieckGroup::eq(const GrothElement& x, const GrothElement& y) const {
  if (strategy_ == EqStrategy::PresentationLattice) {
    check(x);
    check(y);
    auto v = model_->embed_class(x);
    const auto w = model_->embed_class(y);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
    return model_->group->is_zero(v);
  }
  return witness(x, y).has_value();
}

GrothElement GrothendieckGroup::zero() const { return {base_.identity(), base_.identity()}; }

GrothElement GrothendieckGroup::add(const GrothElement& x, const GrothElement& y) const {
  return {base_.op(x.first, y.first), base_.op(x.second, y.second)};
}

GrothElement GrothendieckGroup::neg(const GrothElement& x) const { return {x.second, x.first}; }

GrothElement GrothendieckGroup::sub(const GrothElement& x, const GrothElement& y) const {
  return add(x, neg(y));
}

GrothElement GrothendieckGroup::multiple(const GrothElement& x, std::uint64_t n) const {
  return {base_.multiple(x.first, n), base_.multiple(x.second, n)};
}

GrothElement GrothendieckGroup::canonical(const MonoidValue& m) const {
  base_.check(m);
  return {m, base_.identity()};
}

namespace {

void reduce_parts(const Monoid& m, MonoidValue& a, MonoidValue& b, std::size_t offset) {
  switch (m.kind()) {
    case MonoidKind::Free:
      for (std::size_t i = 0; i < m.width(); ++i) {
        const auto common = std::min(a.parts[offset + i], b.parts[offset + i]);
        a.parts[offset + i] -= common;
        b.parts[offset + i] -= common;
      }
      break;
    case MonoidKind::Lattice:
      for (std::size_t i = 0; i < m.width(); ++i) {
        a.parts[offset + i] -= b.parts[offset + i];
        b.parts[offset + i] = 0;
      }
      break;
    case MonoidKind::DirectSum:
      for (std::size_t i = 0; i < m.components().size(); ++i)
        reduce_parts(m.components()[i], a, b, offset + m.component_offset(i));
      break;
    default:
      break;
  }
}

}  // namespace

GrothElement GrothendieckGroup::reduced(const GrothElement& x) const {
  if (strategy_ == EqStrategy::FiniteWitness) return x;
  GrothElement out = x;
  reduce_parts(base_, out.first, out.second, 0);
  return out;
}

std::optional<MonoidValue> GrothendieckGroup::canonical_preimage(const GrothElement& x) const {
  check(x);
  if (base_.is_finite()) {
    for (const auto& m : base_.elements())
      if (eq(canonical(m), x)) return m;
    return std::nullopt;
  }
  switch (base_.kind()) {
    case MonoidKind::Free: {
      MonoidValue m = x.first;
      for (std::size_t i = 0; i < m.size(); ++i) {
        m.parts[i] -= x.second.parts[i];
        if (m.parts[i] < 0) return std::nullopt;
      }
      return m;
    }
    case MonoidKind::Lattice: {
      MonoidValue m = x.first;
      for (std::size_t i = 0; i < m.size(); ++i) m.parts[i] -= x.second.parts[i];
      return m;
    }
    case MonoidKind::DirectSum: {
      MonoidValue out;
      for (std::size_t i = 0; i < base_.components().size(); ++i) {
        GrothendieckGroup part(base_.components()[i]);
        auto pre = part.canonical_preimage(
            {base_.component_part(x.first, i), base_.component_part(x.second, i)});
        if (!pre) return std::nullopt;
        out.parts.insert(out.parts.end(), pre->parts.begin(), pre->parts.end());
      }
      return out;
    }
    default:
      throw AlgebraError(ErrorKind::UnsupportedFamily,
                         "canonical image membership is not decided for presented monoids");
  }
}

bool canonical_map_injective(const GrothendieckGroup& g) {
  const Monoid& m = g.base();
  if (m.kind() == MonoidKind::Presentation)
    throw AlgebraError(ErrorKind::UnsupportedFamily,
                       "injectivity is not decided for presented monoids");
  if (m.is_finite()) {
    // Pairwise [a,0] = [b,0] search with exact witness enumeration.
    const GrothendieckGroup witness_group(m, EqStrategy::FiniteWitness);
    const auto elems = m.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (witness_group.eq(witness_group.canonical(elems[i]), witness_group.canonical(elems[j])))
          return false;
    return true;
  }
  if (g.strategy() == EqStrategy::CancellativeCrossSum) return true;
  throw AlgebraError(ErrorKind::UnsupportedFamily, "injectivity is not decided for this family");
}

// ---------------------------------------------------------------------------
// Finite class enumeration

FiniteGrothClasses::FiniteGrothClasses(const GrothendieckGroup& g) : group_(&g) {
  const auto elems = g.base().elements();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      GrothElement x{a, b};
      const bool known = std::any_of(reps_.begin(), reps_.end(),
                                     [&](const GrothElement& r) { return g.eq(r, x); });
      if (!known) reps_.push_back(std::move(x));
    }
}

std::size_t FiniteGrothClasses::index_of(const GrothElement& x) const {
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (group_->eq(reps_[i], x)) return i;
  throw AlgebraError(ErrorKind::MalformedElement, "no class for " + to_string(x));
}

// ---------------------------------------------------------------------------
// Universal property

UniversalExtension::UniversalExtension(GrothendieckGroup g, Monoid target, MonoidMap map,
                                       std::size_t samples, std::uint64_t seed)
    : group_(std::move(g)), target_(std::move(target)), map_(std::move(map)) {
  if (target_.kind() != MonoidKind::Cayley || !target_.is_group())
    throw AlgebraError(ErrorKind::InvalidInput, "target must be a finite abelian group table");
  const auto& t = target_.table();
  const std::size_t e = target_.table_identity();
  inverse_.resize(t.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    inverse_[a] = static_cast<std::size_t>(std::find(t[a].begin(), t[a].end(), e) - t[a].begin());

  const Monoid& base = group_.base();
  auto image = [&](const MonoidValue& m) {
    auto v = map_(m);
    if (!target_.contains(v))
      throw AlgebraError(ErrorKind::InvalidInput, "map leaves the target group at " + to_string(m));
    return v;
  };
  if (image(base.identity()) != target_.identity())
    throw AlgebraError(ErrorKind::InvalidInput, "map does not preserve the identity");
  auto check_pair = [&](const MonoidValue& a, const MonoidValue& b) {
    if (image(base.op(a, b)) != target_.op(image(a), image(b)))
      throw AlgebraError(ErrorKind::InvalidInput,
                         "map is not additive at " + to_string(a) + ", " + to_string(b));
  };
  if (base.is_finite()) {
    const auto elems = base.elements();
    for (const auto& a : elems)
      for (const auto& b : elems) check_pair(a, b);
  } else {
    Lcg64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) check_pair(base.sample(rng), base.sample(rng));
  }
}

MonoidValue UniversalExtension::operator()(const GrothElement& x) const {
  group_.check(x);
  const auto ga = map_(x.first);
  const auto gb = map_(x.second);
  const auto inv = static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(gb[0])]);
  return target_.op(ga, MonoidValue{inv});
}

// ---------------------------------------------------------------------------
// Orders

GrothComparator order_from_monoid_order(const GrothendieckGroup& g, Comparator monoid_order) {
  bool cancellative = false;
  try {
    cancellative = g.base().is_cancellative();
  } catch (const AlgebraError&) {
    cancellative = false;
  }
  if (!cancellative)
    throw AlgebraError(ErrorKind::Precondition, "order transfer needs a cancellative monoid");
  return [g, cmp = std::move(monoid_order)](const GrothElement& x, const GrothElement& y) {
    const Monoid& m = g.base();
    return cmp(m.op(x.first, y.second), m.op(x.second, y.first));
  };
}

TorsionError::TorsionError(TorsionWitness w)
    : AlgebraError(ErrorKind::Torsion, "group has torsion: " + to_string(w.element) +
                                           " has order " + w.order.get_str()),
      witness_(std::move(w)) {}

TotalOrder::TotalOrder(std::shared_ptr<const PresentedModel> model) : model_(std::move(model)) {
  const auto& group = *model_->group;
  const auto& V = group.snf().V;
  for (auto slot : group.free_slots()) {
    int sign = 1;
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (V(i, slot) != 0) {
        sign = V(i, slot) > 0 ? 1 : -1;
        break;
      }
    signs_.push_back(sign);
  }
}

std::vector<mpz_class> TotalOrder::coordinates(const std::vector<mpz_class>& generator_vector) const {
  auto c = model_->group->free_coordinates(generator_vector);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (signs_[j] < 0) c[j] = -c[j];
  return c;
}

std::vector<mpz_class> TotalOrder::coordinates(const GrothElement& x) const {
  return coordinates(model_->embed_class(x));
}

std::strong_ordering TotalOrder::compare(const GrothElement& x, const GrothElement& y) const {
  const auto cx = coordinates(x);
  const auto cy = coordinates(y);
  for (std::size_t j = 0; j < cx.size(); ++j) {
    const int s = cmp(cx[j], cy[j]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TotalOrder::compare_monoid(const MonoidValue& a, const MonoidValue& b) const {
  const auto id = model_->monoid.identity();
  return compare({a, id}, {b, id});
}

std::vector<std::vector<mpz_class>> TotalOrder::generator_images() const {
  const std::size_t k = model_->group->generators();
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpz_class> e(k);
    e[i] = 1;
    out.push_back(coordinates(e));
  }
  return out;
}

GrothElement TotalOrder::from_coordinates(const std::vector<mpz_class>& c) const {
  const auto& group = *model_->group;
  std::vector<mpz_class> x(group.generators());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto basis = group.free_basis_vector(j);
    const mpz_class coef = signs_[j] < 0 ? mpz_class(-c[j]) : c[j];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += coef * basis[i];
  }
  return model_->realize(x);
}

TotalOrder build_total_order(std::shared_ptr<const PresentedModel> model) {
  const auto& group = *model->group;
  if (!group.torsion_slots().empty()) {
    TorsionWitness w;
    w.generator_vector = group.torsion_basis_vector(0);
    w.element = model->realize(w.generator_vector);
    w.coordinates.assign(group.free_slots().size() + group.torsion_slots().size(), 0);
    w.coordinates[group.free_slots().size()] = 1;
    w.order = group.snf().invariant_factors[group.torsion_slots()[0]];
    throw TorsionError(std::move(w));
  }
  return TotalOrder(std::move(model));
}

TotalOrder build_total_order(const Monoid& m) {
  return build_total_order(std::make_shared<const PresentedModel>(presented_model(m)));
}

}  // namespace grothring

namespace grothring {

OrderCheck check_total_order(const TotalOrder& order, std::int64_t radius) {
  const Monoid& m = order.model().monoid;
  const auto box = integer_box(order.rank(), -radius, radius);
  const std::size_t n = box.size();

  std::vector<GrothElement> elems;
  elems.reserve(n);
  for (const auto& c : box) {
    std::vector<mpz_class> cz;
    for (auto v : c.parts) cz.emplace_back(static_cast<long>(v));
    elems.push_back(order.from_coordinates(cz));
  }
  auto coords = [&](const GrothElement& x) {
    std::vector<std::int64_t> out;
    for (const auto& v : order.coordinates(x)) out.push_back(v.get_si());
    return out;
  };
  std::vector<std::vector<std::int64_t>> own(n);
  for (std::size_t i = 0; i < n; ++i) own[i] = coords(elems[i]);

  OrderCheck result;
  auto fail = [&](const char* law, std::size_t a, std::size_t b, std::size_t c) {
    result.ok = false;
    result.violation = OrderViolation{law, box[a], box[b], box[c]};
    return result;
  };

  // Distinct box points must be distinct, totally ordered group elements.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (own[i] == own[j]) return fail("totality", i, j, j);
      if (own[j] < own[i]) ++below[i];
    }
  {
    auto sorted = below;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) return fail("transitivity", i, i, i);
  }

  std::vector<std::vector<std::int64_t>> sums(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      sums[i * n + k] = coords({m.op(elems[i].first, elems[k].first),
                                m.op(elems[i].second, elems[k].second)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(own[i] < own[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++result.triples_checked;
        if (!(sums[i * n + k] < sums[j * n + k])) return fail("compatibility", i, j, k);
      }
    }
  return result;
}

}  // namespace grothring
