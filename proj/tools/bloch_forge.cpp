#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bloch/cli.hpp"

int main(int argc, char** argv) {
  bloch::RunConfig config;
  std::string command;
  std::vector<std::string> args;
  std::string output = "json";
  double tol_deg = 0, tol_wedge = 0;
  bool no_delta = false;

  std::string commands;
  for (const auto& c : bloch::command_names()) commands += (commands.empty() ? "" : ", ") + c;

  CLI::App app{"Bloch-group invariants of triangulated 3-manifold data", "bloch-forge"};
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("args", args, "input files, or the check name (five-term, boundary, identities)");
  app.add_option("--precision", config.precision_bits, "working precision in bits (53 = binary64)");
  app.add_option("--seed", config.seed, "seed for randomized checks");
  app.add_option("--trials", config.trials, "trials per randomized check");
  app.add_option("--output", output, "report format")->check(CLI::IsMember({"json", "text"}));
  auto* deg = app.add_option("--tol-deg", tol_deg, "degeneracy tolerance (binary64 units)");
  auto* wedge = app.add_option("--tol-wedge", tol_wedge, "residual floor for a nonzero delta");
  app.add_option("--volume-tol", config.volume_tol, "volume tolerance for compare and checks");
  app.add_option("--delta-bits", config.delta_bits, "detection bits for the delta test");
  app.add_flag("--no-delta", no_delta, "skip the delta test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bloch::Report r;
    r.command = command;
    r.results = {{"error", {{"kind", "UsageError"}, {"message", e.what()}}}};
    std::cout << bloch::dump(bloch::to_json(r));
    std::cerr << "bloch-forge: " << e.what() << "\n";
    return bloch::kExitInputError;
  }
  if (*deg) config.tol_deg = tol_deg;
  if (*wedge) config.tol_wedge = tol_wedge;
  config.delta = !no_delta;
  config.output = output == "text" ? bloch::OutputFormat::text : bloch::OutputFormat::json;

  const bloch::RunOutcome out = bloch::run(command, args, config, &std::cerr);
  if (config.output == bloch::OutputFormat::text) {
    std::cout << bloch::render_text(out.report);
  } else {
    std::cout << bloch::dump(bloch::to_json(out.report));
  }
  return out.exit_code;
}
