#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grothring/io.hpp"

namespace grothring::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kValidationError = 3,
  kUsage = 64,
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t depth = 8;
  bool timing = false;
};

/// Parsed inputs of one analysis. Absent inputs are null.
struct Inputs {
  io::json monoid;
  io::json ring;
  io::json sgens;
  io::json fraction;
  std::size_t rank = 1;
};

struct Outcome {
  io::json results = io::json::object();
  io::json checks = io::json::object();
  bool pass() const;
};

/// Runs one analysis ("groth compute", "iso verify", ...) without I/O.
Outcome analyze(const std::string& command, const Inputs& in, const Options& opt);

/// Compares `expected` against `actual` as a fragment: objects recursively by
/// key, everything else by value. Mismatching paths are appended.
void match_fragment(const io::json& expected, const io::json& actual, const std::string& path,
                    std::vector<std::string>& mismatches);

/// Runs every entry of corpus_dir/entries.json.
Outcome run_corpus(const std::string& corpus_dir, const Options& opt, std::string& digest_material);

/// Full command line (without the program name). Writes the report to `out`
/// (or the --out file) and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grothring::cli
