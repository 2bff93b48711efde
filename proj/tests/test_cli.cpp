#include <sstream>

#include "doctest.h"
#include "grothring/cli.hpp"

using namespace grothring;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string monoid(const std::string& name) {
  return std::string(GROTHRING_SOURCE_DIR) + "/corpus/monoids/" + name + ".json";
}

const std::string kZ5 = R"({"kind":"Zmod","n":5})";

}  // namespace

TEST_CASE("monoid check reports") {
  auto r = run({"monoid", "check", "--monoid", monoid("t2")});
  REQUIRE(r.code == 0);
  auto res = r.report()["results"];
  CHECK(res["cancellative"] == false);
  CHECK(res["quasi_zero_size"] == 3);
  CHECK(res["groth_trivial"] == true);

  r = run({"monoid", "check", "--monoid", R"({"kind":"free","rank":2})"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["cancellative"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"monoid", "check", "--monoid", monoid("bad_assoc")}).code == 3);
  CHECK(run({"monoid", "check", "--monoid", monoid("bad_shape")}).code == 3);
  CHECK(run({"monoid", "check", "--monoid", monoid("not_json")}).code == 2);
  CHECK(run({"monoid", "check", "--monoid", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"monoid", "check", "--monoid", R"({"kind":"tree"})"}).code == 2);
  CHECK(run({"localize", "units", "--ring", R"({"kind":"Zmod","n":1})", "--sgens", "[1]"}).code == 3);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"groth"}).code == 64);
  CHECK(run({"groth", "compute"}).code == 64);
  CHECK(run({"--help"}).code == 0);

  const auto bad = run({"monoid", "check", "--monoid", monoid("bad_assoc")});
  const auto err = json::parse(bad.err);
  CHECK(err["error"] == "axiom-violation");
  CHECK(err["triple"].size() == 3);
  // A denominator outside S is a validation error.
  CHECK(run({"localize", "decompose", "--ring", kZ5, "--monoid", R"({"kind":"free","rank":1})",
             "--sgens", "[[[1,[1]]]]", "--fraction", R"({"num":[[1,[0]]],"den":[[2,[1]]]})"})
            .code == 3);
}

TEST_CASE("groth compute and order") {
  auto r = run({"groth", "compute", "--monoid", monoid("semigroup23")});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["free_rank"] == 1);
  CHECK(r.report()["results"]["torsion"] == json::array());

  r = run({"groth", "compute", "--monoid", monoid("free0")});
  CHECK(r.report()["results"]["order"] == 1);

  r = run({"groth", "order", "--monoid", monoid("n_x_z2")});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["torsion_free"] == false);
  CHECK(r.report()["results"]["witness"]["order"] == 2);

  r = run({"groth", "order", "--monoid", monoid("semigroup23")});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["rank"] == 1);
  CHECK(r.report()["checks"]["order_compatible"] == true);
}

TEST_CASE("mring nzd needs finite inputs") {
  auto r = run({"mring", "nzd", "--ring", R"({"kind":"Zmod","n":2})", "--monoid", monoid("z6_mul")});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["cancellative"] == false);
  CHECK(r.report()["results"]["monomials_nonzerodivisors"] == false);
  CHECK(run({"mring", "nzd", "--ring", R"({"kind":"Z"})", "--monoid", monoid("z2")}).code == 3);
}

TEST_CASE("localize and iso subcommands") {
  auto r = run({"localize", "units", "--ring", R"({"kind":"Zmod","n":12})", "--sgens", "[1,4]"});
  REQUIRE(r.code == 0);
  auto res = r.report()["results"];
  CHECK(res["units"] == 2);
  CHECK(res["groth_order"] == 2);
  CHECK(res["iso"] == true);

  r = run({"localize", "decompose", "--ring", kZ5, "--monoid", R"({"kind":"free","rank":1})", "--sgens",
           "[[[1,[1]]]]", "--fraction", R"({"num":[[2,[1]],[1,[3]]],"den":[[1,[2]]]})"});
  REQUIRE(r.code == 0);
  res = r.report()["results"];
  CHECK(res["components"].size() == 2);
  CHECK(res["integer_keys"]["[[1],[0]]"] == 1);
  CHECK(res["integer_keys"]["[[0],[1]]"] == -1);

  r = run({"iso", "laurent", "--ring", kZ5, "--rank", "2", "--samples", "200", "--seed", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["roundtrip_ok"] == true);
  CHECK(r.report()["results"]["samples"] == 200);

  r = run({"--samples", "30", "iso", "verify", "--ring", R"({"kind":"Z"})", "--monoid", monoid("free1"),
           "--sgens", "[2]"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["hom_ok"] == true);
  CHECK(r.report()["samples"] == 30);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  const std::vector<std::string> args{"iso", "laurent", "--ring", kZ5, "--rank", "1", "--samples", "50"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.report().contains("elapsed_ms"));
  auto timed = args;
  timed.push_back("--timing");
  CHECK(run(timed).report().contains("elapsed_ms"));
  // Different inputs, different digest.
  auto other = args;
  other[5] = "2";
  CHECK(run(other).report()["inputs_digest"] != a.report()["inputs_digest"]);
}

TEST_CASE("fragment matching") {
  std::vector<std::string> mm;
  cli::match_fragment(json::parse(R"({"a":1,"b":{"c":[1,2]}})"),
                      json::parse(R"({"a":1,"b":{"c":[1,2],"d":0},"e":3})"), "", mm);
  CHECK(mm.empty());
  cli::match_fragment(json::parse(R"({"a":2,"f":0})"), json::parse(R"({"a":1})"), "", mm);
  CHECK(mm.size() == 2);
}
