#include <sstream>
#include <string>

#include "bloch/cli.hpp"
#include "doctest.h"

using namespace bloch;

namespace {
std::string data(const std::string& name) { return std::string(BLOCH_TEST_DATA) + "/" + name; }

json strip_time(Report r) {
  r.wall_time = 0;
  return to_json(r);
}
}  // namespace

TEST_CASE("volume of the regular example") {
  const auto out = run("volume", {data("regular_shapes.json")}, {});
  CHECK(out.exit_code == kExitOk);
  CHECK(std::fabs(out.report.results["volume"]["volume"].get<double>() - 2.0298832128) <= 1e-9);
  CHECK(out.report.command == "volume");
}

TEST_CASE("exit codes") {
  std::ostringstream diag;
  const auto bad = run("volume", {data("zero_vertex.json")}, {}, &diag);
  CHECK(bad.exit_code == kExitInputError);
  CHECK(bad.report.results["error"]["kind"] == "GeometryError");
  CHECK(bad.report.results["error"]["index"] == 0);
  CHECK(diag.str().find("GeometryError") != std::string::npos);

  CHECK(run("volume", {data("malformed.json")}, {}).exit_code == kExitInputError);
  CHECK(run("frobnicate", {}, {}).exit_code == kExitInputError);
  CHECK(run("volume", {}, {}).exit_code == kExitInputError);
  RunConfig low;
  low.precision_bits = 20;
  CHECK(run("volume", {data("regular_shapes.json")}, low).exit_code == kExitInputError);

  // Ten-digit shape data agrees in volume only.
  RunConfig volume_only;
  volume_only.delta = false;
  const auto same = run("compare", {data("regular_hyperbolic.json"), data("regular_shapes.json")}, volume_only);
  CHECK(same.exit_code == kExitOk);
  CHECK(run("compare", {data("regular_hyperbolic.json"), data("regular_shapes.json")}, {}).exit_code ==
        kExitVerdictFail);
  const auto diff = run("compare", {data("regular_hyperbolic.json"), data("perturbed_hyperbolic.json")}, {});
  CHECK(diff.exit_code == kExitVerdictFail);
  CHECK(diff.report.results["verdict"] == "different");
  CHECK(run("fw", {data("regular_shapes.json")}, {}).exit_code == kExitInputError);
}

TEST_CASE("compare a file with itself") {
  const auto out = run("compare", {data("regular_hyperbolic.json"), data("regular_hyperbolic.json")}, {});
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.results["verdict"] == "equal (necessary conditions)");
  CHECK(out.report.results["equal"] == true);
}

TEST_CASE("check five-term") {
  RunConfig c;
  c.seed = 7;
  c.trials = 100;
  const auto out = run("check", {"five-term"}, c);
  CHECK(out.exit_code == kExitOk);
  const json& chk = out.report.results["checks"][0];
  CHECK(chk["pass"] == true);
  CHECK(chk["trials"] == 100);
  CHECK(chk["max_residual"].get<double>() <= 1e-9);
}

TEST_CASE("check identities and file boundaries") {
  RunConfig c;
  c.trials = 20;
  const auto out = run("check", {"identities"}, c);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.results["checks"].size() == 6);
  CHECK(run("check", {"boundary", data("regular_hyperbolic.json")}, c).exit_code == kExitVerdictFail);
  CHECK(run("check", {"nonsense"}, c).exit_code == kExitInputError);
}

TEST_CASE("reports are deterministic") {
  RunConfig c;
  c.trials = 10;
  for (const auto& [cmd, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"invariant", {data("regular_hyperbolic.json")}},
           {"fw", {data("fw_worked.json")}},
           {"flag", {data("flag_h_lift.json")}},
           {"lift-h", {data("worked_quadruple.json")}},
           {"check", {"identities"}}}) {
    const auto a = run(cmd, args, c);
    const auto b = run(cmd, args, c);
    CHECK_MESSAGE(a.exit_code == kExitOk, cmd);
    CHECK_MESSAGE(dump(strip_time(a.report)) == dump(strip_time(b.report)), cmd);
  }
}

TEST_CASE("warnings and text output") {
  const auto out = run("fw", {data("fw_worked.json")}, {});
  CHECK_FALSE(out.report.warnings.empty());
  const std::string text = render_text(out.report);
  CHECK(text.find("command: fw") != std::string::npos);
  CHECK(text.find("warning: ") != std::string::npos);
  CHECK(text.find("volume.volume: ") != std::string::npos);
}

TEST_CASE("high precision runs") {
  RunConfig c;
  c.precision_bits = 200;
  const auto out = run("volume", {data("regular_hyperbolic.json")}, c);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.results["volume"]["precision_bits"] == 200);
}
