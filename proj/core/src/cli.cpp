#include "bloch/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bloch/checks.hpp"
#include "bloch/errors.hpp"
#include "bloch/invariants.hpp"

namespace bloch {

void validate(const RunConfig& c) {
  if (c.precision_bits < 53) throw UsageError("--precision must be at least 53");
  if (c.precision_bits > 1 << 16) throw UsageError("--precision is capped at 65536 bits");
  if (c.tol_deg && !(*c.tol_deg > 0)) throw UsageError("--tol-deg must be positive");
  if (c.tol_wedge && !(*c.tol_wedge > 0)) throw UsageError("--tol-wedge must be positive");
  if (!(c.volume_tol > 0)) throw UsageError("--volume-tol must be positive");
  if (c.delta_bits < 53 || c.delta_bits > 4096) throw UsageError("--delta-bits must lie in [53, 4096]");
  if (c.trials == 0) throw UsageError("--trials must be positive");
}

json to_json(const RunConfig& c) {
  json j{{"precision_bits", c.precision_bits},
         {"volume_tol", c.volume_tol},
         {"delta_bits", c.delta_bits},
         {"delta", c.delta},
         {"seed", c.seed},
         {"trials", c.trials},
         {"output", c.output == OutputFormat::json ? "json" : "text"}};
  j["tol_deg"] = c.tol_deg ? json(*c.tol_deg) : json(nullptr);
  j["tol_wedge"] = c.tol_wedge ? json(*c.tol_wedge) : json(nullptr);
  return j;
}

std::vector<std::string> command_names() {
  return {"invariant", "volume", "fw", "flag", "lift-h", "compare", "check", "selftest"};
}

namespace {

constexpr const char* kDevelopingMapCaveat =
    "vertex data is not checked to come from a developing map; the invariant is computed from the formulas as given";

InvariantOptions options_of(const RunConfig& c) {
  InvariantOptions o;
  if (c.tol_deg) o.tolerances.deg = *c.tol_deg;
  if (c.tol_wedge) o.wedge_tol = *c.tol_wedge;
  o.compute_delta = c.delta;
  o.delta_bits = c.delta_bits;
  o.volume_tol = c.volume_tol;
  return o;
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, const RunConfig& c, std::ostream* diag)
      : args_(args), config_(c), opts_(options_of(c)), diag_(diag) {}

  int exit_code = kExitOk;
  json results = json::object();
  std::vector<std::string> warnings;

  void dispatch(const std::string& command) {
    if (command == "invariant") return invariant_cmd(nullptr);
    if (command == "fw") return invariant_cmd("cr");
    if (command == "flag") return invariant_cmd("flag");
    if (command == "volume") return volume_cmd();
    if (command == "lift-h") return lift_cmd();
    if (command == "compare") return compare_cmd();
    if (command == "check") return check_cmd();
    if (command == "selftest") return selftest_cmd();
    throw UsageError("unknown command '" + command + "'");
  }

 private:
  const std::vector<std::string>& args_;
  RunConfig config_;
  InvariantOptions opts_;
  std::ostream* diag_;

  void need_files(std::size_t n, const char* what) {
    if (args_.size() != n) throw UsageError(std::string(what) + " takes " + std::to_string(n) + " file argument(s)");
  }

  // Runs f<double> or f<Mp> depending on the requested precision.
  template <class F>
  auto at_precision(F&& f) {
    if (config_.precision_bits <= 53) return f(double{});
    PrecisionScope scope(config_.precision_bits);
    return f(Mp{});
  }

  void caveat(Geometry g) {
    if (g == Geometry::cr || g == Geometry::flag) warnings.emplace_back(kDevelopingMapCaveat);
  }
  void absorb(const std::vector<std::string>& w) { warnings.insert(warnings.end(), w.begin(), w.end()); }

  void invariant_cmd(const char* geometry) {
    need_files(1, "this command");
    const Triangulation t = parse_triangulation(args_[0]);
    if (geometry && to_string(t.geometry) != geometry) {
      throw GeometryMismatch(std::string("expected ") + geometry + " data, got " + to_string(t.geometry));
    }
    caveat(t.geometry);
    results = at_precision([&](auto tag) {
      using R = decltype(tag);
      const auto r = invariant<R>(t, opts_);
      absorb(r.warnings);
      return to_json(r);
    });
  }

  void volume_cmd() {
    need_files(1, "volume");
    const Triangulation t = parse_triangulation(args_[0]);
    caveat(t.geometry);
    InvariantOptions o = opts_;
    o.compute_delta = false;
    results = at_precision([&](auto tag) {
      using R = decltype(tag);
      const auto r = invariant<R>(t, o);
      absorb(r.warnings);
      return json{{"geometry", to_string(t.geometry)}, {"volume", to_json(r.volume)}};
    });
  }

  void lift_cmd() {
    need_files(1, "lift-h");
    const Triangulation t = parse_triangulation(args_[0]);
    const Triangulation lifted = lift_by_h(t);
    results["triangulation"] = to_json(lifted);
    results["invariant"] = at_precision([&](auto tag) {
      using R = decltype(tag);
      const auto r = flag_invariant<R>(lifted, opts_);
      absorb(r.warnings);
      return to_json(r);
    });
  }

  void compare_cmd() {
    need_files(2, "compare");
    const Triangulation a = parse_triangulation(args_[0]);
    const Triangulation b = parse_triangulation(args_[1]);
    caveat(a.geometry);
    results = at_precision([&](auto tag) {
      using R = decltype(tag);
      const auto r = compare<R>(a, b, opts_);
      absorb(r.warnings);
      if (!r.equal) exit_code = kExitVerdictFail;
      return to_json(r);
    });
  }

  json check_json(const PropertyCheck& c) {
    if (!c.pass()) exit_code = kExitVerdictFail;
    json j{{"name", c.name},
           {"trials", c.trials},
           {"failures", c.failures},
           {"max_residual", c.max_residual},
           {"tolerance", c.tolerance},
           {"pass", c.pass()}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
  }

  void check_cmd() {
    if (args_.empty()) throw UsageError("check needs one of five-term, boundary, identities");
    const std::string& which = args_[0];
    Sampler s(config_.seed);
    const std::size_t n = config_.trials;
    json checks = json::array();
    if (which == "five-term") {
      if (args_.size() != 1) throw UsageError("check five-term takes no file");
      checks.push_back(check_json(check_boundary_vanishing(Geometry::hyperbolic, s, n, opts_)));
    } else if (which == "boundary") {
      if (args_.size() > 2) throw UsageError("check boundary takes at most one file");
      if (args_.size() == 2) {
        checks.push_back(check_json(file_vanishes(args_[1])));
      } else {
        for (Geometry g : {Geometry::hyperbolic, Geometry::cr, Geometry::flag}) {
          checks.push_back(check_json(check_boundary_vanishing(g, s, n, opts_)));
        }
        checks.push_back(check_json(check_chain_algebra(s, n)));
      }
    } else if (which == "identities") {
      if (args_.size() != 1) throw UsageError("check identities takes no file");
      checks.push_back(check_json(check_h_identity(s, n)));
      checks.push_back(check_json(check_four_times(s, std::max<std::size_t>(1, n / 10))));
      checks.push_back(check_json(check_dilog_identities(s, n)));
      checks.push_back(check_json(check_cross_ratio_law(s, n)));
      checks.push_back(check_json(check_pencil_independence(s, std::max<std::size_t>(1, n / 2), 10)));
      checks.push_back(check_json(check_pencil_oracle()));
    } else {
      throw UsageError("unknown check '" + which + "' (five-term, boundary, identities)");
    }
    results["check"] = which;
    results["checks"] = std::move(checks);
  }

  // The file's invariant should vanish: volume within tolerance, delta zero.
  PropertyCheck file_vanishes(const std::string& path) {
    const Triangulation t = parse_triangulation(path);
    caveat(t.geometry);
    PropertyCheck c{"vanishing of " + path, 0, 0, 0, opts_.volume_tol, ""};
    const auto r = invariant<double>(t, opts_);
    absorb(r.warnings);
    c.record(std::fabs(r.volume.volume));
    if (r.delta) {
      c.note = "delta " + to_string(r.delta->status);
      if (r.delta->status != WedgeStatus::zero) ++c.failures;
    }
    return c;
  }

  void selftest_cmd() {
    if (!args_.empty()) throw UsageError("selftest takes no arguments");
    json criteria = json::array();
    std::size_t passed = 0;
    for (const CriterionResult& r : run_selftest(config_.seed)) {
      if (diag_) {
        *diag_ << "criterion " << r.id << " " << (r.pass ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
      }
      criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      passed += r.pass ? 1 : 0;
    }
    if (passed != criteria.size()) exit_code = kExitVerdictFail;
    results["criteria"] = std::move(criteria);
    results["passed"] = passed;
  }
};

json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> index) {
  json e{{"kind", kind}, {"message", message}};
  if (index) e["index"] = *index;
  return json{{"error", std::move(e)}};
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

RunOutcome run(const std::string& command, const std::vector<std::string>& args, const RunConfig& config,
               std::ostream* diagnostics) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.report.command = command;
  out.report.config = to_json(config);
  Runner runner(args, config, diagnostics);
  auto fail = [&](const std::string& kind, const std::string& message, std::optional<std::size_t> index) {
    out.report.results = error_json(kind, message, index);
    out.exit_code = kExitInputError;
    if (diagnostics) *diagnostics << "bloch-forge: " << kind << ": " << message << "\n";
  };
  try {
    validate(config);
    runner.dispatch(command);
    out.report.results = std::move(runner.results);
    out.exit_code = runner.exit_code;
  } catch (const GeometryError& e) {
    fail(e.kind(), e.what(), e.index());
  } catch (const Error& e) {
    fail(e.kind(), e.what(), std::nullopt);
  } catch (const std::exception& e) {
    fail("InternalError", e.what(), std::nullopt);
  }
  out.report.warnings = std::move(runner.warnings);
  out.report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  flatten(r.results, "", out);
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "wall_time: " << r.wall_time << " s\n";
  return out.str();
}

}  // namespace bloch
