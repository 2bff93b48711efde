#include "grothring/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace grothring::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw AlgebraError(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::size_t as_size(const json& j) {
  const auto v = as_int(j);
  if (v < 0) bad("expected a nonnegative integer, got " + j.dump());
  return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> as_int_vector(const json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x));
  return out;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Monoid parse_monoid(const json& j) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "cayley") {
    const auto n = as_size(field(j, "size"));
    const auto identity = as_size(field(j, "identity"));
    const auto& t = field(j, "table");
    if (!t.is_array()) bad("\"table\" must be an array of rows");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : t) {
      if (!row.is_array()) bad("table rows must be arrays");
      auto& r = table.emplace_back();
      for (const auto& x : row) r.push_back(as_size(x));
    }
    if (table.size() != n)
      throw AlgebraError(ErrorKind::InvalidInput, "table has " + std::to_string(table.size()) +
                                                      " rows but size is " + std::to_string(n));
    return Monoid::cayley(std::move(table), identity);
  }
  if (k == "free") return Monoid::free(as_size(field(j, "rank")));
  if (k == "lattice") return Monoid::lattice(as_size(field(j, "rank")));
  if (k == "presentation") {
    const auto gens = as_size(field(j, "generators"));
    const auto& rels = field(j, "relations");
    if (!rels.is_array()) bad("\"relations\" must be an array");
    std::vector<Relation> out;
    for (const auto& rel : rels) {
      if (!rel.is_array() || rel.size() != 2) bad("a relation is a pair [u, v]");
      out.push_back({as_int_vector(rel[0]), as_int_vector(rel[1])});
    }
    return Monoid::presentation(gens, std::move(out));
  }
  if (k == "direct_sum") {
    const auto& cs = field(j, "components");
    if (!cs.is_array()) bad("\"components\" must be an array");
    std::vector<Monoid> parts;
    for (const auto& c : cs) parts.push_back(parse_monoid(c));
    return Monoid::direct_sum(std::move(parts));
  }
  bad("unknown monoid kind \"" + k + "\"");
}

json monoid_to_json(const Monoid& m) {
  switch (m.kind()) {
    case MonoidKind::Cayley:
      return {{"kind", "cayley"}, {"size", m.size()}, {"identity", m.table_identity()},
              {"table", m.table()}};
    case MonoidKind::Free:
      return {{"kind", "free"}, {"rank", m.rank()}};
    case MonoidKind::Lattice:
      return {{"kind", "lattice"}, {"rank", m.rank()}};
    case MonoidKind::Presentation: {
      json rels = json::array();
      for (const auto& r : m.relations()) rels.push_back({r.lhs, r.rhs});
      return {{"kind", "presentation"}, {"generators", m.rank()}, {"relations", rels}};
    }
    case MonoidKind::DirectSum: {
      json cs = json::array();
      for (const auto& c : m.components()) cs.push_back(monoid_to_json(c));
      return {{"kind", "direct_sum"}, {"components", cs}};
    }
  }
  return {};
}

Ring parse_ring(const json& j) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "Z") return Ring::integers();
  if (k == "Zmod") {
    const auto n = as_int(field(j, "n"));
    if (n < 2) throw AlgebraError(ErrorKind::InvalidInput, "Zmod needs n >= 2");
    return Ring::integers_mod(static_cast<unsigned long>(n));
  }
  bad("unknown ring kind \"" + k + "\"");
}

json ring_to_json(const Ring& r) {
  if (r.is_integers()) return {{"kind", "Z"}};
  return {{"kind", "Zmod"}, {"n", r.modulus().get_ui()}};
}

mpz_class parse_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("bad integer string " + j.dump());
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

json integer_to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::vector<mpz_class> parse_integers(const json& j) {
  if (!j.is_array()) bad("expected an array of integers, got " + j.dump());
  std::vector<mpz_class> out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

json integers_to_json(const std::vector<mpz_class>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(integer_to_json(x));
  return out;
}

MonoidValue parse_value(const json& j, const Monoid& m) {
  MonoidValue v(as_int_vector(j));
  m.check(v);
  return v;
}

json value_to_json(const MonoidValue& v) { return v.parts; }

json groth_to_json(const GrothElement& x) {
  return json::array({value_to_json(x.first), value_to_json(x.second)});
}

std::string groth_key(const GrothElement& x) { return groth_to_json(x).dump(); }

MRElement parse_mr(const json& j, const MonoidRing& r) {
  if (!j.is_array()) bad("a ring element is a list of [coeff, degree] terms");
  std::vector<std::pair<mpz_class, MonoidValue>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("a term is [coeff, degree], got " + t.dump());
    terms.emplace_back(parse_integer(t[0]), parse_value(t[1], r.monoid()));
  }
  return r.from_terms(terms);
}

json mr_to_json(const MRElement& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back(json::array({integer_to_json(c), value_to_json(m)}));
  return out;
}

std::vector<MRElement> parse_mr_list(const json& j, const MonoidRing& r) {
  if (!j.is_array()) bad("expected a list of ring elements");
  std::vector<MRElement> out;
  for (const auto& x : j) out.push_back(parse_mr(x, r));
  return out;
}

json fraction_to_json(const MRFraction& f) {
  return {{"num", mr_to_json(f.num)}, {"den", mr_to_json(f.den)}};
}

json fraction_to_json(const Fraction<Ring>& f) {
  return {{"num", integer_to_json(f.num)}, {"den", integer_to_json(f.den)}};
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t h) {
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace grothring::io
