#pragma once

// Command workflows behind the bloch-forge executable. Argument parsing
// lives in the tool; everything here works on a parsed RunConfig.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bloch/io.hpp"
#include "bloch/selftest.hpp"

namespace bloch {

enum class OutputFormat { json, text };

struct RunConfig {
  int precision_bits = 53;
  std::optional<double> tol_deg;
  std::optional<double> tol_wedge;
  double volume_tol = 1e-8;
  int delta_bits = 128;
  bool delta = true;
  std::uint64_t seed = kSelftestSeed;
  std::size_t trials = 100;
  OutputFormat output = OutputFormat::json;
};

// UsageError on out-of-range values.
void validate(const RunConfig& c);
json to_json(const RunConfig& c);

enum ExitCode : int { kExitOk = 0, kExitVerdictFail = 1, kExitInputError = 2 };

struct RunOutcome {
  Report report;
  int exit_code = kExitOk;
};

// `command` is one of invariant, volume, fw, flag, lift-h, compare, check,
// selftest; `args` are its positionals (files, or the check name followed
// by an optional file). Library errors become an "error" object in the
// results and exit code 2; nothing is thrown.
RunOutcome run(const std::string& command, const std::vector<std::string>& args, const RunConfig& config,
               std::ostream* diagnostics = nullptr);

// Human-readable rendering of a report, one "path: value" line per leaf.
std::string render_text(const Report& r);

std::vector<std::string> command_names();

}  // namespace bloch
