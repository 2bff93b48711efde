#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grothring/cli.hpp"
#include "grothring/smith.hpp"

namespace py = pybind11;
using namespace grothring;
using io::json;

namespace {

// Integers cross the boundary as decimal strings; the Python side converts.
std::vector<std::vector<std::string>> to_strings(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_str();
  return out;
}

py::dict snf(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw AlgebraError(ErrorKind::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = mpz_class(rows[i][j]);
  }
  const auto r = smith_normal_form(a);
  std::vector<std::string> factors;
  for (const auto& d : r.invariant_factors) factors.push_back(d.get_str());
  py::dict out;
  out["invariant_factors"] = factors;
  out["D"] = to_strings(r.D);
  out["U"] = to_strings(r.U);
  out["V"] = to_strings(r.V);
  return out;
}

std::string analyze(const std::string& command, const std::string& inputs, std::uint64_t seed,
                    std::size_t samples, std::size_t depth) {
  const auto j = io::parse_json(inputs);
  cli::Inputs in;
  auto take = [&](const char* key, json& slot) {
    if (j.contains(key)) slot = j[key];
  };
  take("monoid", in.monoid);
  take("ring", in.ring);
  take("sgens", in.sgens);
  take("fraction", in.fraction);
  if (j.contains("rank")) in.rank = j["rank"].get<std::size_t>();
  cli::Options opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.depth = depth;
  const auto o = cli::analyze(command, in, opt);
  return json{{"results", o.results}, {"checks", o.checks}, {"pass", o.pass()}}.dump();
}

bool groth_eq(const std::string& monoid, const std::string& x, const std::string& y) {
  const auto m = io::parse_monoid(io::parse_json(monoid));
  const GrothendieckGroup g(m);
  auto pair = [&](const std::string& text) {
    const auto j = io::parse_json(text);
    if (!j.is_array() || j.size() != 2) throw AlgebraError(ErrorKind::Parse, "a class is [a, b]");
    return GrothElement{io::parse_value(j[0], m), io::parse_value(j[1], m)};
  };
  return g.eq(pair(x), pair(y));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grothendieck groups, graded localizations and monoid rings";

  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);

  m.def("smith_normal_form", &snf, py::arg("rows"));
  m.def("analyze", &analyze, py::arg("command"), py::arg("inputs"), py::arg("seed") = 0,
        py::arg("samples") = 200, py::arg("depth") = 8);
  m.def("groth_eq", &groth_eq, py::arg("monoid"), py::arg("x"), py::arg("y"));
  m.def("is_cancellative", [](const std::string& monoid) {
    return io::parse_monoid(io::parse_json(monoid)).is_cancellative();
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
