#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grothring/grothendieck.hpp"
#include "grothring/localization.hpp"
#include "grothring/ring.hpp"

namespace grothring::io {

using json = nlohmann::json;

/// Parses JSON text; syntax errors become AlgebraError(Parse).
json parse_json(std::string_view text);
std::string read_file(const std::string& path);

/// Monoid description: cayley, free, lattice, presentation or direct_sum.
/// Shape errors raise Parse; table axioms raise AxiomViolationError.
Monoid parse_monoid(const json& j);
json monoid_to_json(const Monoid& m);

/// {"kind":"Z"} or {"kind":"Zmod","n":N}.
Ring parse_ring(const json& j);
json ring_to_json(const Ring& r);

/// Integers are JSON numbers when they fit in a long, decimal strings otherwise.
mpz_class parse_integer(const json& j);
json integer_to_json(const mpz_class& x);
std::vector<mpz_class> parse_integers(const json& j);
json integers_to_json(const std::vector<mpz_class>& xs);

MonoidValue parse_value(const json& j, const Monoid& m);
json value_to_json(const MonoidValue& v);
json groth_to_json(const GrothElement& x);
/// Compact text of groth_to_json, used as an object key.
std::string groth_key(const GrothElement& x);

/// [[coeff, [degree...]], ...] in degree order.
MRElement parse_mr(const json& j, const MonoidRing& r);
json mr_to_json(const MRElement& f);
std::vector<MRElement> parse_mr_list(const json& j, const MonoidRing& r);

/// {"num": ..., "den": ...}
json fraction_to_json(const MRFraction& f);
json fraction_to_json(const Fraction<Ring>& f);

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t x);

}  // namespace grothring::io
