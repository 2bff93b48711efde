#include "grothring/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "grothring/isomorphisms.hpp"

#ifndef GROTHRING_CORPUS_DIR
#define GROTHRING_CORPUS_DIR "corpus"
#endif

namespace grothring::cli {

using io::json;

namespace {

AlgebraError invalid(const std::string& what) { return AlgebraError(ErrorKind::InvalidInput, what); }

const json& need(const json& j, const char* name) {
  if (j.is_null()) throw invalid(std::string("missing --") + name);
  return j;
}

Monoid monoid_of(const Inputs& in) { return io::parse_monoid(need(in.monoid, "monoid")); }
Ring ring_of(const Inputs& in) { return io::parse_ring(need(in.ring, "ring")); }

json structure_json(const FGAbelianStructure& s) {
  json out{{"free_rank", s.free_rank}, {"torsion", io::integers_to_json(s.torsion)}};
  const auto order = s.order();
  out["order"] = order ? io::integer_to_json(*order) : json(nullptr);
  return out;
}

Outcome monoid_check(const Inputs& in) {
  const auto m = monoid_of(in);
  Outcome o;
  auto& r = o.results;
  r["kind"] = to_string(m.kind());
  r["axioms_ok"] = true;
  r["finite"] = m.is_finite();
  const auto s = groth_structure(m);
  const bool trivial = s.free_rank == 0 && s.torsion.empty();
  r["groth_trivial"] = trivial;
  if (m.is_finite()) {
    const auto qz = quasi_zero_submonoid(m);
    r["size"] = m.size();
    json q = json::array();
    for (const auto& x : qz) q.push_back(io::value_to_json(x));
    r["quasi_zero"] = q;
    r["quasi_zero_size"] = qz.size();
    const bool canc = m.is_cancellative();
    const bool inj = canonical_map_injective(GrothendieckGroup(m));
    r["cancellative"] = canc;
    r["canonical_injective"] = inj;
    o.checks["cancellative_iff_injective"] = canc == inj;
    o.checks["quasi_zero_all_iff_trivial"] = (qz.size() == m.size()) == trivial;
  } else {
    try {
      r["cancellative"] = m.is_cancellative();
    } catch (const AlgebraError& e) {
      if (e.kind() != ErrorKind::UnsupportedFamily) throw;
      r["cancellative"] = nullptr;
    }
  }
  return o;
}

Outcome groth_compute(const Inputs& in) {
  const auto m = monoid_of(in);
  Outcome o;
  const auto s = groth_structure(m);
  o.results = structure_json(s);
  try {
    o.results["strategy"] = to_string(GrothendieckGroup(m).strategy());
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::StrategyUnavailable) throw;
    o.results["strategy"] = nullptr;
  }
  if (m.is_finite()) {
    const FiniteGrothClasses classes{GrothendieckGroup(m)};
    o.checks["agrees_with_witness_enumeration"] = s.order() && *s.order() == classes.size();
  }
  return o;
}

Outcome groth_order(const Inputs& in) {
  const auto m = monoid_of(in);
  Outcome o;
  try {
    const auto order = build_total_order(m);
    o.results["torsion_free"] = true;
    o.results["rank"] = order.rank();
    json cert = json::array();
    for (const auto& g : order.generator_images()) cert.push_back(io::integers_to_json(g));
    o.results["certificate"] = cert;
    const std::int64_t radius = order.rank() <= 3 ? 4 : order.rank() == 4 ? 2 : 1;
    const auto check = check_total_order(order, radius);
    o.results["check_radius"] = radius;
    o.checks["order_compatible"] = check.ok;
    if (check.violation)
      o.results["violation"] = {{"law", check.violation->law},
                                {"a", io::value_to_json(check.violation->a)},
                                {"b", io::value_to_json(check.violation->b)},
                                {"c", io::value_to_json(check.violation->c)}};
  } catch (const TorsionError& e) {
    const auto& w = e.witness();
    o.results["torsion_free"] = false;
    o.results["witness"] = {{"element", io::groth_to_json(w.element)},
                            {"order", io::integer_to_json(w.order)},
                            {"generator_vector", io::integers_to_json(w.generator_vector)},
                            {"coordinates", io::integers_to_json(w.coordinates)}};
    const auto model = presented_model(m);
    auto v = w.generator_vector;
    bool vanishes = !model.group->is_zero(v);
    for (auto& x : v) x *= w.order;
    vanishes = vanishes && model.group->is_zero(v);
    o.checks["witness_verified"] = vanishes;
  }
  return o;
}

Outcome mring_nzd(const Inputs& in) {
  const auto r = ring_of(in);
  const auto m = monoid_of(in);
  if (!r.is_finite() || !m.is_finite())
    throw invalid("mring nzd decides exhaustively and needs a finite ring and a finite monoid");
  const GrothendieckGroup g(m);
  Outcome o;
  const bool canc = m.is_cancellative();
  const bool inj = canonical_map_injective(g);
  json zero_divisors = json::array();
  for (const auto& e : m.elements())
    if (!monomial_is_nonzerodivisor(r, m, e)) zero_divisors.push_back(io::value_to_json(e));
  const bool nzd = zero_divisors.empty();
  const bool gr = group_ring_map_injective(r, g);
  o.results = {{"cancellative", canc},
               {"canonical_injective", inj},
               {"monomials_nonzerodivisors", nzd},
               {"zero_divisor_degrees", zero_divisors},
               {"group_ring_injective", gr}};
  o.checks["four_way_agreement"] = canc == inj && inj == nzd && nzd == gr;
  return o;
}

Outcome localize_decompose(const Inputs& in, const Options& opt) {
  const MonoidRing rm(ring_of(in), monoid_of(in));
  const auto gens = io::parse_mr_list(need(in.sgens, "sgens"), rm);
  const MRLocalization loc{MultiplicativeSet<MonoidRing>(rm, gens)};
  const GrothendieckGroup g(rm.monoid());
  const auto& fj = need(in.fraction, "fraction");
  if (!fj.is_object() || !fj.contains("num") || !fj.contains("den"))
    throw AlgebraError(ErrorKind::Parse, "a fraction is {\"num\": ..., \"den\": ...}");
  const auto num = io::parse_mr(fj["num"], rm);
  const auto den = io::parse_mr(fj["den"], rm);
  const auto cert = loc.set().certify(den, static_cast<unsigned>(opt.depth));
  if (!cert) throw AlgebraError(ErrorKind::MalformedDenominator, "denominator is not certified in S");
  const auto f = loc.fraction(num, *cert);
  const auto parts = decompose_fraction(loc, g, f);

  Outcome o;
  json comps = json::object();
  json ints = json::object();
  const bool rank_one = rm.monoid().kind() == MonoidKind::Free && rm.monoid().rank() == 1;
  auto sum = loc.zero();
  bool distinct = true;
  bool homogeneous = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [key, fx] = parts[i];
    const auto k = io::groth_key(key);
    comps[k] = io::fraction_to_json(fx);
    if (rank_one) ints[k] = key.first[0] - key.second[0];
    sum = loc.add(sum, fx);
    for (std::size_t j = 0; j < i; ++j) distinct = distinct && !g.eq(parts[j].first, key);
    homogeneous = homogeneous && g.eq(fraction_degree(loc, g, fx), key);
  }
  o.results["components"] = comps;
  if (rank_one) o.results["integer_keys"] = ints;
  o.checks["sum_back"] = loc.eq(sum, f);
  o.checks["keys_distinct"] = distinct;
  o.checks["components_homogeneous"] = homogeneous;
  return o;
}

Outcome localize_units(const Inputs& in) {
  const auto r = ring_of(in);
  if (!r.is_finite()) throw invalid("localize units needs a finite ring");
  const Localization<Ring> loc{MultiplicativeSet<Ring>(r, io::parse_integers(need(in.sgens, "sgens")))};
  const auto emb = groth_units_embedding(loc);
  const auto iso = groth_units_iso(loc);
  Outcome o;
  o.results = {{"units", iso.units_order},
               {"groth_order", iso.groth_order},
               {"iso", iso.isomorphism()},
               {"saturation", io::integers_to_json(saturate(loc.set()))},
               {"groth_order_of_S", emb.groth_order},
               {"embedding", emb.embedding()}};
  o.checks["iso"] = iso.isomorphism();
  o.checks["embedding"] = emb.embedding();
  return o;
}

Outcome iso_outcome(const IsoReport& rep) {
  Outcome o;
  o.results = {{"hom_ok", rep.hom_ok},
               {"injective_ok", rep.injective_ok},
               {"roundtrip_ok", rep.roundtrip_ok},
               {"graded_ok", rep.graded_ok},
               {"samples", rep.samples}};
  for (const char* k : {"hom_ok", "injective_ok", "roundtrip_ok", "graded_ok"}) o.checks[k] = o.results[k];
  return o;
}

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--timing") continue;
    if (args[i] == "--out" || args[i] == "-o") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += args[i];
  }
  return s;
}

/// Inline JSON when the text starts like JSON, a file path otherwise.
json load(const std::string& text, std::string& digest) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::string body;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    body = text;
  } else {
    body = io::read_file(text);
  }
  digest += body;
  digest += '\0';
  return io::parse_json(body);
}

struct Failure {
  int code;
  json detail;
};

Failure classify(const std::exception& e) {
  if (const auto* ax = dynamic_cast<const AxiomViolationError*>(&e))
    return {kValidationError,
            {{"error", to_string(ErrorKind::AxiomViolation)}, {"axiom", ax->axiom()}, {"triple", ax->triple()}, {"message", e.what()}}};
  if (const auto* ae = dynamic_cast<const AlgebraError*>(&e)) {
    const int code = ae->kind() == ErrorKind::Parse ? kParseError : kValidationError;
    return {code, {{"error", to_string(ae->kind())}, {"message", e.what()}}};
  }
  if (dynamic_cast<const json::exception*>(&e)) return {kParseError, {{"error", to_string(ErrorKind::Parse)}, {"message", e.what()}}};
  return {kValidationError, {{"error", "internal"}, {"message", e.what()}}};
}

}  // namespace

bool Outcome::pass() const {
  for (const auto& [k, v] : checks.items())
    if (!v.is_boolean() || !v.get<bool>()) return false;
  return true;
}

Outcome analyze(const std::string& command, const Inputs& in, const Options& opt) {
  if (command == "monoid check") return monoid_check(in);
  if (command == "groth compute") return groth_compute(in);
  if (command == "groth order") return groth_order(in);
  if (command == "mring nzd") return mring_nzd(in);
  if (command == "localize decompose") return localize_decompose(in, opt);
  if (command == "localize units") return localize_units(in);
  if (command == "iso verify") {
    std::vector<mpz_class> s;
    if (!in.sgens.is_null()) s = io::parse_integers(in.sgens);
    return iso_outcome(verify_iso(HMap(ring_of(in), monoid_of(in), s), opt.samples, opt.seed));
  }
  if (command == "iso laurent") return iso_outcome(laurent_iso(ring_of(in), in.rank, opt.samples, opt.seed));
  throw invalid("unknown command \"" + command + "\"");
}

void match_fragment(const json& expected, const json& actual, const std::string& path,
                    std::vector<std::string>& mismatches) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      mismatches.push_back(path + ": expected an object, got " + actual.dump());
      return;
    }
    for (const auto& [k, v] : expected.items()) {
      const auto it = actual.find(k);
      if (it == actual.end())
        mismatches.push_back(path + "/" + k + ": missing");
      else
        match_fragment(v, *it, path + "/" + k, mismatches);
    }
    return;
  }
  if (expected != actual)
    mismatches.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

Outcome run_corpus(const std::string& corpus_dir, const Options& opt, std::string& digest) {
  namespace fs = std::filesystem;
  const fs::path dir(corpus_dir);
  const auto entries = load((dir / "entries.json").string(), digest);
  if (!entries.is_array()) throw AlgebraError(ErrorKind::Parse, "entries.json must be an array");
  Outcome o;
  json reports = json::array();
  json failed = json::array();
  std::size_t passed = 0;
  for (const auto& e : entries) {
    const auto name = e.at("name").get<std::string>();
    const auto command = e.at("command").get<std::string>();
    json rep{{"name", name}, {"command", command}};
    std::vector<std::string> mismatches;
    try {
      Inputs in;
      if (e.contains("monoid")) {
        const auto& mj = e["monoid"];
        in.monoid = mj.is_string() ? load((dir / mj.get<std::string>()).string(), digest) : mj;
      }
      if (e.contains("ring")) in.ring = e["ring"];
      if (e.contains("sgens")) in.sgens = e["sgens"];
      if (e.contains("fraction")) in.fraction = e["fraction"];
      if (e.contains("rank")) in.rank = e["rank"].get<std::size_t>();
      auto local = opt;
      if (e.contains("samples")) local.samples = e["samples"].get<std::size_t>();
      digest += e.dump();
      const auto out = analyze(command, in, local);
      rep["results"] = out.results;
      rep["checks"] = out.checks;
      if (e.contains("expected_error")) mismatches.push_back("expected an error, analysis succeeded");
      if (!out.pass()) mismatches.push_back("a check failed");
      if (e.contains("expected")) match_fragment(e["expected"], out.results, "", mismatches);
    } catch (const std::exception& ex) {
      const auto f = classify(ex);
      rep["error"] = f.detail;
      if (!e.contains("expected_error"))
        mismatches.push_back(std::string("unexpected error: ") + ex.what());
      else
        match_fragment(e["expected_error"], f.detail, "error", mismatches);
    }
    const bool ok = mismatches.empty();
    rep["pass"] = ok;
    if (!ok) {
      rep["mismatches"] = mismatches;
      failed.push_back(name);
    } else {
      ++passed;
    }
    o.checks[name] = ok;
    reports.push_back(rep);
  }
  o.results = {{"entries", reports}, {"total", entries.size()}, {"passed", passed}, {"failed", failed}};
  return o;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Grothendieck groups, graded localizations and monoid rings", "grothring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string out_path;
  std::string monoid, ring, sgens, fraction, corpus = GROTHRING_CORPUS_DIR;
  std::size_t rank = 1;
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "Random samples per check")->capture_default_str();
  app.add_option("--depth", opt.depth, "Closure and certification depth")->capture_default_str();
  app.add_option("--out,-o", out_path, "Write the report to FILE");
  app.add_flag("--timing", opt.timing, "Add elapsed_ms to the report");

  std::string command;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    auto* sub = group->add_subcommand(name, help);
    sub->callback([&command, group, name] { command = group->get_name() + " " + name; });
    return sub;
  };
  auto monoid_opt = [&](CLI::App* s) { s->add_option("--monoid", monoid, "Monoid file or inline JSON")->required(); };
  auto ring_opt = [&](CLI::App* s) { s->add_option("--ring", ring, "Ring description JSON")->required(); };

  auto* g_monoid = app.add_subcommand("monoid", "Monoid analyses")->require_subcommand(1);
  monoid_opt(leaf(g_monoid, "check", "Axioms, cancellativity and the quasi-zero submonoid"));
  auto* g_groth = app.add_subcommand("groth", "Grothendieck group analyses")->require_subcommand(1);
  monoid_opt(leaf(g_groth, "compute", "Structure of G(M)"));
  monoid_opt(leaf(g_groth, "order", "Total order certificate or torsion witness"));
  auto* g_mring = app.add_subcommand("mring", "Monoid ring analyses")->require_subcommand(1);
  {
    auto* s = leaf(g_mring, "nzd", "Four-way cancellativity agreement");
    ring_opt(s);
    monoid_opt(s);
  }
  auto* g_loc = app.add_subcommand("localize", "Localizations")->require_subcommand(1);
  {
    auto* s = leaf(g_loc, "decompose", "Homogeneous decomposition of a fraction");
    ring_opt(s);
    monoid_opt(s);
    s->add_option("--sgens", sgens, "Generators of S")->required();
    s->add_option("--fraction", fraction, "{\"num\": ..., \"den\": ...}")->required();
    auto* u = leaf(g_loc, "units", "Units of S^-1 R against G of the saturation");
    ring_opt(u);
    u->add_option("--sgens", sgens, "Generators of S")->required();
  }
  auto* g_iso = app.add_subcommand("iso", "The isomorphism h")->require_subcommand(1);
  {
    auto* s = leaf(g_iso, "verify", "Randomized check of h");
    ring_opt(s);
    monoid_opt(s);
    s->add_option("--sgens", sgens, "Generators of S in R");
    auto* l = leaf(g_iso, "laurent", "Laurent polynomial round trips");
    ring_opt(l);
    l->add_option("--rank", rank, "Number of variables")->capture_default_str();
  }
  auto* g_corpus = app.add_subcommand("corpus", "Bundled corpus")->require_subcommand(1);
  leaf(g_corpus, "run", "Run every corpus entry")->add_option("--corpus", corpus, "Corpus directory")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::string digest = echo(args);
  digest += '\0';
  Outcome outcome;
  try {
    if (command == "corpus run") {
      outcome = run_corpus(corpus, opt, digest);
    } else {
      Inputs in;
      if (!monoid.empty()) in.monoid = load(monoid, digest);
      if (!ring.empty()) in.ring = load(ring, digest);
      if (!sgens.empty()) in.sgens = load(sgens, digest);
      if (!fraction.empty()) in.fraction = load(fraction, digest);
      in.rank = rank;
      outcome = analyze(command, in, opt);
    }
  } catch (const std::exception& e) {
    const auto f = classify(e);
    err << f.detail.dump() << "\n";
    return f.code;
  }

  json report{{"command", echo(args)},
              {"inputs_digest", io::hex64(io::fnv1a(digest))},
              {"seed", opt.seed},
              {"samples", opt.samples},
              {"depth", opt.depth},
              {"results", outcome.results},
              {"checks", outcome.checks},
              {"pass", outcome.pass()}};
  if (opt.timing)
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  const auto text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kValidationError;
    }
    f << text;
  }
  if (!outcome.pass()) {
    for (const auto& [k, v] : outcome.checks.items())
      if (v != true) err << "check failed: " << k << "\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace grothring::cli
