#pragma once

#include <cstddef>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcpa/params.hpp"

namespace lcpa {

enum class Mode { transfer, branches, cpa_scan, cpa_window, ratio_scan, dynamics, approx_deviation };

const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string variable;  // a SystemParams field, "phase", "amp_in", or "i_in" (= amp_in^2)
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;
  bool log_spacing = false;

  std::vector<double> values() const;
};

struct Scenario {
  std::string name;
  SystemParams params;
  Mode mode = Mode::transfer;
  std::optional<SweepAxis> sweep;
  double phase = 0.0;
  std::string output_path = ".";  // directory receiving <name>*.csv and <name>_summary.json

  // Mode knobs; every field has a default so scenario files may omit them.
  double i_in = 1.0;          // branches (without an i_in sweep) and dynamics
  double i_in_max = 250.0;    // phase = pi transfer rows span [0, i_in_max]
  double i_c_min = 1e-6;
  double i_c_max = 1e7;
  std::size_t samples = 2000;
  bool tune_cpa = false;      // replace delta_ac by the CPA finder's value first
  double horizon = 200.0;
  double dt = 1e-3;
  double tol = 1e-10;
  std::size_t record_every = 100;
};

/// Throws ScenarioError on an invalid scenario.
void validate_scenario(const Scenario& s);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

struct ScenarioResult {
  std::vector<std::string> files;
  nlohmann::json summary;
};

/// Runs a scenario, writing its CSV files and JSON summary into
/// scenario.output_path. Per-row solver failures land in the output rather
/// than aborting the run.
ScenarioResult run_scenario(const Scenario& s);

std::vector<std::string> list_scenarios();

/// Bundled scenario by name; throws ScenarioError for unknown names.
Scenario bundled_scenario(const std::string& name);

/// Atom number at which the Omega1 = 0.5 / 1.5 bistable regions at delta_p = 6
/// sit at input intensities [70, 95] and [105, 220], for fixed g sqrt(N) = 10
/// (see fit_atom_number).
inline constexpr double kFigureAtomNumber = 2.7989e5;

/// Figure parameter point with the fitted g-N split.
SystemParams figure_params();

/// Sets a sweep variable on params; returns false for drive variables.
bool set_param_field(SystemParams& p, const std::string& name, double value);

}  // namespace lcpa
