#pragma once

// Built-in acceptance checks 1-8, runnable from the CLI (`selftest`) and the
// acceptance test binary. Thresholds are frozen here.

#include <cstdint>
#include <string>
#include <vector>

namespace bloch {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // seconds
};

inline constexpr std::uint64_t kSelftestSeed = 7;

// Frozen reference values.
inline constexpr double kCatalan = 0.91596559417721901505;      // D(i)
inline constexpr double kClausenPiOver3 = 1.01494160640965362502;  // D(exp(i pi/3))

// Checks whose evaluation throws are reported as failures with the message.
CriterionResult run_criterion(int id, std::uint64_t seed = kSelftestSeed);
std::vector<CriterionResult> run_selftest(std::uint64_t seed = kSelftestSeed);

}  // namespace bloch
