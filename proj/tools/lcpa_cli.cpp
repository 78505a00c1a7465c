// lcpa: batch front end for the cavity/atom steady-state and CPA analyses.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <omp.h>

#include "lcpa/io.hpp"
#include "lcpa/scenario.hpp"

using nlohmann::json;

namespace {

struct Globals {
  std::string params_path;
  std::string out = ".";
  int workers = 0;
  bool deterministic = true;
};

lcpa::SystemParams load_params(const std::string& path) {
  if (path.empty()) return lcpa::default_params();
  std::ifstream f(path);
  if (!f) throw lcpa::ScenarioError("cannot read params file: " + path);
  return lcpa::params_from_json(json::parse(f));
}

int run(lcpa::Scenario s, const Globals& g) {
  s.output_path = g.out;
  const auto res = lcpa::run_scenario(s);
  std::cout << res.summary.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical bistability and coherent perfect absorption in a driven three-level atom cavity"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--params", g.params_path, "JSON file with system parameters (units of gamma)");
  app.add_option("--out", g.out, "Output directory for CSV files and the JSON summary");
  app.add_option("--workers", g.workers, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--seedless-deterministic,!--no-seedless-deterministic", g.deterministic,
               "Deterministic output (always on; no random sampling is used)");

  // Knobs shared by several subcommands; each subcommand exposes the ones it uses.
  lcpa::Scenario knobs;
  double dp_min = 5.0, dp_max = 7.5;
  std::size_t count = 26;
  double i_in_min = 0.0, i_in_max = 0.0;
  std::string sweep_var;
  double sweep_start = 0.0, sweep_stop = 1.0;
  std::string scenario_target;

  auto* transfer = app.add_subcommand("transfer", "Transfer curve I_out(I_in) parametrized by I_c");
  transfer->add_option("--phase", knobs.phase, "Relative phase of the two inputs");
  transfer->add_option("--i-c-min", knobs.i_c_min, "Smallest intracavity intensity");
  transfer->add_option("--i-c-max", knobs.i_c_max, "Largest intracavity intensity");
  transfer->add_option("--samples", knobs.samples, "Initial grid size");
  transfer->add_flag("--tune-cpa", knobs.tune_cpa, "Set delta_ac to the CPA value for delta_p");

  auto* branches = app.add_subcommand("branches", "Steady branches at given input intensities");
  branches->add_option("--phase", knobs.phase, "Relative phase of the two inputs");
  branches->add_option("--i-in", knobs.i_in, "Single input intensity");
  branches->add_option("--i-in-min", i_in_min, "Start of an input intensity sweep");
  branches->add_option("--i-in-max", i_in_max, "End of an input intensity sweep");
  branches->add_option("--count", count, "Sweep points");
  branches->add_flag("--tune-cpa", knobs.tune_cpa, "Set delta_ac to the CPA value for delta_p");

  auto* cpa_scan = app.add_subcommand("cpa-scan", "CPA points over a range of probe detunings");
  cpa_scan->add_option("--dp-min", dp_min, "First probe detuning");
  cpa_scan->add_option("--dp-max", dp_max, "Last probe detuning");
  cpa_scan->add_option("--count", count, "Number of detunings");

  auto* cpa_window = app.add_subcommand("cpa-window", "Probe detuning window in which CPA exists");

  auto* ratio = app.add_subcommand("ratio-scan", "High-branch output/input ratio at the CPA input");
  ratio->add_option("--sweep", sweep_var, "Parameter to sweep (e.g. omega1)");
  ratio->add_option("--start", sweep_start, "Sweep start");
  ratio->add_option("--stop", sweep_stop, "Sweep stop");
  ratio->add_option("--count", count, "Sweep points");

  auto* dyn = app.add_subcommand("dynamics", "Time evolution from the empty cavity");
  dyn->add_option("--i-in", knobs.i_in, "Input intensity");
  dyn->add_option("--phase", knobs.phase, "Relative phase of the two inputs");
  dyn->add_option("--horizon", knobs.horizon, "Integration time (1/gamma)");
  dyn->add_option("--dt", knobs.dt, "Initial step");
  dyn->add_option("--tol", knobs.tol, "Stop once the derivative max-norm is below this");
  dyn->add_option("--record-every", knobs.record_every, "Steps between recorded states");

  auto* approx = app.add_subcommand("eq4-deviation", "Closed-form approximation vs exact solver");
  approx->add_option("--i-c-min", knobs.i_c_min, "Smallest intracavity intensity");
  approx->add_option("--i-c-max", knobs.i_c_max, "Largest intracavity intensity");
  approx->add_option("--samples", knobs.samples, "Log-spaced grid size");

  auto* scen = app.add_subcommand("scenario", "Bundled or file-based scenarios");
  scen->require_subcommand(1);
  auto* scen_run = scen->add_subcommand("run", "Run a bundled scenario by name or a scenario JSON file");
  scen_run->add_option("target", scenario_target, "Scenario name or path")->required();
  auto* scen_list = scen->add_subcommand("list", "List bundled scenarios");

  CLI11_PARSE(app, argc, argv);

  if (g.workers > 0) omp_set_num_threads(g.workers);

  try {
    if (scen_list->parsed()) {
      for (const auto& n : lcpa::list_scenarios()) std::cout << n << '\n';
      return 0;
    }
    if (scen_run->parsed()) {
      lcpa::Scenario s;
      if (std::filesystem::is_regular_file(scenario_target)) {
        std::ifstream f(scenario_target);
        s = lcpa::scenario_from_json(json::parse(f));
        if (app.get_option("--out")->count() == 0) g.out = s.output_path;
      } else {
        s = lcpa::bundled_scenario(scenario_target);
      }
      if (!g.params_path.empty()) s.params = load_params(g.params_path);
      return run(s, g);
    }

    knobs.params = load_params(g.params_path);
    if (transfer->parsed()) {
      knobs.name = "transfer";
      knobs.mode = lcpa::Mode::transfer;
    } else if (branches->parsed()) {
      knobs.name = "branches";
      knobs.mode = lcpa::Mode::branches;
      if (i_in_max > i_in_min) knobs.sweep = lcpa::SweepAxis{"i_in", i_in_min, i_in_max, count, false};
    } else if (cpa_scan->parsed()) {
      knobs.name = "cpa_scan";
      knobs.mode = lcpa::Mode::cpa_scan;
      knobs.sweep = lcpa::SweepAxis{"delta_p", dp_min, dp_max, count, false};
    } else if (cpa_window->parsed()) {
      knobs.name = "cpa_window";
      knobs.mode = lcpa::Mode::cpa_window;
    } else if (ratio->parsed()) {
      knobs.name = "ratio_scan";
      knobs.mode = lcpa::Mode::ratio_scan;
      if (!sweep_var.empty()) knobs.sweep = lcpa::SweepAxis{sweep_var, sweep_start, sweep_stop, count, false};
    } else if (dyn->parsed()) {
      knobs.name = "dynamics";
      knobs.mode = lcpa::Mode::dynamics;
    } else if (approx->parsed()) {
      knobs.name = "deviation";
      knobs.mode = lcpa::Mode::approx_deviation;
    }
    return run(knobs, g);
  } catch (const lcpa::ValidationError& e) {
    std::cerr << "invalid parameter '" << e.field() << "': " << e.what() << '\n';
    return 2;
  } catch (const lcpa::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
