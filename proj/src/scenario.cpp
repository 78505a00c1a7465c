#include "lcpa/scenario.hpp"

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "lcpa/bloch.hpp"
#include "lcpa/cavity.hpp"
#include "lcpa/cpa.hpp"
#include "lcpa/dynamics.hpp"
#include "lcpa/approx.hpp"
#include "lcpa/io.hpp"
#include "lcpa/turning_points.hpp"

namespace lcpa {

namespace {

using nlohmann::json;

constexpr std::pair<Mode, const char*> kModeNames[] = {
    {Mode::transfer, "transfer"},     {Mode::branches, "branches"},
    {Mode::cpa_scan, "cpa-scan"},     {Mode::cpa_window, "cpa-window"},
    {Mode::ratio_scan, "ratio-scan"}, {Mode::dynamics, "dynamics"},
    {Mode::approx_deviation, "eq4-deviation"},
};

const char* const kParamFields[] = {"gamma", "gamma12", "kappa_l", "kappa_r", "tau", "g",
                                    "n_atoms", "omega1", "delta_p", "delta_ac", "delta1"};

bool is_param_field(const std::string& v) {
  for (const char* f : kParamFields) {
    if (v == f) return true;
  }
  return false;
}

bool is_drive_field(const std::string& v) { return v == "phase" || v == "amp_in" || v == "i_in"; }

std::string fmt(double v) { return format_number(v); }

// One concrete run point after applying a sweep value.
struct Point {
  SystemParams params;
  double phase;
  double i_in;
  std::optional<double> value;
};

Point make_point(const Scenario& s, std::optional<double> value) {
  Point pt{s.params, s.phase, s.i_in, value};
  if (value && s.sweep) {
    const auto& var = s.sweep->variable;
    if (var == "phase") {
      pt.phase = *value;
    } else if (var == "amp_in") {
      pt.i_in = *value * *value;
    } else if (var == "i_in") {
      pt.i_in = *value;
    } else {
      set_param_field(pt.params, var, *value);
    }
  }
  pt.params = validate_params(pt.params);
  return pt;
}

std::vector<std::optional<double>> sweep_points(const Scenario& s) {
  if (!s.sweep) return {std::nullopt};
  std::vector<std::optional<double>> out;
  for (double v : s.sweep->values()) out.emplace_back(v);
  return out;
}

// Runs f(i) for i in [0, n) on the worker pool, keeping per-index results so
// output order is independent of completion order.
template <class F>
void for_each_index(std::size_t n, F&& f) {
  std::exception_ptr error;
  const auto m = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(lcpa_scenario_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string file_for(const Scenario& s, std::size_t k, std::size_t n) {
  const std::string base = n > 1 ? s.name + "_" + std::to_string(k) : s.name;
  return (std::filesystem::path(s.output_path) / (base + ".csv")).string();
}

json region_json(const BistableRegion& r) {
  return {{"i_in_lower", r.i_in_lower}, {"i_in_upper", r.i_in_upper},
          {"i_c_lower", r.i_c_lower},   {"i_c_upper", r.i_c_upper},
          {"degenerate", r.degenerate}};
}

void apply_cpa_tuning(const Scenario& s, Point& pt, json& entry) {
  if (!s.tune_cpa) return;
  const CpaPoint cpa = find_cpa_point_fast(pt.params.delta_p, pt.params);
  pt.params.delta_ac = cpa.delta_ac;
  entry["cpa"] = {{"delta_ac", cpa.delta_ac}, {"i_c", cpa.i_c}, {"i_in", cpa.i_in}};
}

// --- transfer ----------------------------------------------------------------

CsvTable transfer_table(const Scenario& s, const Point& pt, json& entry) {
  CsvTable t({"i_c", "i_in", "i_out_l", "i_out_r", "re_alpha", "im_alpha", "stability"});
  const SystemParams& p = pt.params;

  if (is_undriven_phase(pt.phase, p)) {
    // Drives cancel: the only steady state is the empty cavity and both
    // mirrors reflect their input.
    const std::size_t n = std::max<std::size_t>(s.samples, 2);
    std::vector<std::vector<std::string>> rows(n);
    for_each_index(n, [&](std::size_t i) {
      const double i_in = s.i_in_max * static_cast<double>(i) / static_cast<double>(n - 1);
      const auto b = make_branch(0.0, DriveConfig::from_intensity(i_in, pt.phase), p);
      rows[i] = {fmt(0.0), fmt(i_in), fmt(std::norm(b.out_l)), fmt(std::norm(b.out_r)),
                 fmt(0.0), fmt(0.0), to_string(b.stability)};
    });
    for (auto& r : rows) t.add_row(std::move(r));
    entry["regions"] = json::array();
    entry["cpr"] = true;
    return t;
  }

  SweepOptions opt;
  opt.i_c_min = s.i_c_min;
  opt.i_c_max = s.i_c_max;
  opt.n_samples = s.samples;
  const TransferCurve curve = sweep_transfer_curve(p, pt.phase, opt);
  const DriveConfig unit_drive(1.0, pt.phase);

  std::vector<std::string> labels(curve.samples.size());
  for_each_index(curve.samples.size(), [&](std::size_t i) {
    const auto& smp = curve.samples[i];
    SteadyBranch b;
    b.alpha = smp.alpha;
    b.i_c = smp.i_c;
    b.rho = steady_density(smp.alpha, p);
    labels[i] = to_string(classify_stability(b, unit_drive, p));
  });
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const auto& smp = curve.samples[i];
    t.add_row({fmt(smp.i_c), fmt(smp.i_in), fmt(smp.i_out_l), fmt(smp.i_out_r),
               fmt(smp.alpha.real()), fmt(smp.alpha.imag()), labels[i]});
  }

  const auto tp = find_turning_points(curve);
  json regions = json::array();
  for (const auto& r : tp.regions) regions.push_back(region_json(r));
  entry["regions"] = regions;
  if (tp.warning) entry["warning"] = *tp.warning;
  return t;
}

// --- per-mode drivers ----------------------------------------------------------

void run_per_point_files(const Scenario& s, ScenarioResult& res,
                         CsvTable (*make)(const Scenario&, const Point&, json&)) {
  const auto pts = sweep_points(s);
  json entries = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    json entry;
    if (pts[k]) entry[s.sweep->variable] = *pts[k];
    const std::string path = file_for(s, k, pts.size());
    try {
      Point pt = make_point(s, pts[k]);
      apply_cpa_tuning(s, pt, entry);
      const CsvTable t = make(s, pt, entry);
      t.write_file(path);
      entry["rows"] = t.rows().size();
      entry["file"] = path;
      res.files.push_back(path);
    } catch (const std::runtime_error& e) {
      if (std::string(e.what()).rfind("cannot open", 0) == 0) throw ScenarioError(e.what());
      entry["error"] = e.what();
    } catch (const std::exception& e) {
      entry["error"] = e.what();
    }
    entries.push_back(entry);
  }
  res.summary["points"] = entries;
}

CsvTable dynamics_table(const Scenario& s, const Point& pt, json& entry) {
  const auto drive = DriveConfig::from_intensity(pt.i_in, pt.phase);
  IntegratorOptions opt;
  opt.dt = s.dt;
  opt.record_every = s.record_every;
  const SystemState vacuum{DensityMatrix3(), 0.0, 0.0};
  const Trajectory tr = time_evolve(vacuum, drive, pt.params, s.horizon, s.tol, opt);

  CsvTable t({"t", "re_alpha", "im_alpha", "rho11", "rho22", "rho33", "abs_rho13"});
  for (const auto& st : tr.states) {
    t.add_row({fmt(st.time), fmt(st.alpha.real()), fmt(st.alpha.imag()), fmt(st.rho.population(1)),
               fmt(st.rho.population(2)), fmt(st.rho.population(3)), fmt(std::abs(st.rho(1, 3)))});
  }
  entry["converged"] = tr.converged;
  entry["steps"] = tr.steps;
  entry["derivative_norm"] = tr.derivative_norm;
  entry["terminal_i_c"] = std::norm(tr.terminal().alpha);
  try {
    json branches = json::array();
    for (const auto& b : solve_branches(pt.i_in, pt.phase, pt.params)) {
      branches.push_back({{"i_c", b.i_c}, {"stability", to_string(b.stability)}});
    }
    entry["steady_branches"] = branches;
  } catch (const std::exception& e) {
    entry["steady_branches_error"] = e.what();
  }
  return t;
}

CsvTable approx_table(const Scenario& s, const Point& pt, json& entry) {
  std::vector<double> grid(std::max<std::size_t>(s.samples, 2));
  const double l0 = std::log(s.i_c_min), l1 = std::log(s.i_c_max);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(grid.size() - 1));
  }
  const auto rows = deviation_report(pt.params, grid);
  CsvTable t({"i_c", "i_in_exact", "i_in_approx", "rel_deviation", "error"});
  double max_dev = 0.0;
  std::size_t failures = 0;
  for (const auto& r : rows) {
    t.add_row({fmt(r.i_c), fmt(r.i_in_exact), fmt(r.i_in_approx), fmt(r.rel_deviation),
               r.error.value_or("")});
    if (r.error) {
      ++failures;
    } else {
      max_dev = std::max(max_dev, r.rel_deviation);
    }
  }
  entry["max_rel_deviation"] = max_dev;
  entry["low_intensity_rel_deviation"] = rows.front().rel_deviation;
  entry["failed_rows"] = failures;
  return t;
}

void run_branches(const Scenario& s, ScenarioResult& res) {
  if (s.sweep && !(s.sweep->variable == "i_in" || s.sweep->variable == "amp_in")) {
    throw ScenarioError("branches mode sweeps over i_in or amp_in only");
  }
  const auto pts = sweep_points(s);
  Point base = make_point(s, std::nullopt);
  json entry;
  apply_cpa_tuning(s, base, entry);

  std::optional<BranchSolver> solver;
  if (!is_undriven_phase(base.phase, base.params)) {
    SweepOptions opt;
    opt.i_c_min = s.i_c_min;
    opt.i_c_max = s.i_c_max;
    opt.n_samples = s.samples;
    solver.emplace(base.params, base.phase, opt);
  }

  std::vector<std::vector<std::vector<std::string>>> rows(pts.size());
  std::vector<std::size_t> counts(pts.size(), 0);
  std::vector<std::string> errors(pts.size());
  for_each_index(pts.size(), [&](std::size_t k) {
    const double i_in = make_point(s, pts[k]).i_in;
    try {
      const auto branches = solver && i_in > 0
                                ? solver->solve(i_in)
                                : solve_branches(i_in, base.phase, base.params);
      counts[k] = branches.size();
      for (std::size_t b = 0; b < branches.size(); ++b) {
        rows[k].push_back({fmt(i_in), std::to_string(b), fmt(branches[b].i_c),
                           fmt(std::norm(branches[b].out_l)), fmt(std::norm(branches[b].out_r)),
                           to_string(branches[b].stability)});
      }
    } catch (const std::exception& e) {
      errors[k] = e.what();
      rows[k].push_back({fmt(i_in), "-1", "nan", "nan", "nan", "error"});
    }
  });

  CsvTable t({"i_in", "branch_index", "i_c", "i_out_l", "i_out_r", "stability"});
  json per_point = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto& r : rows[k]) t.add_row(std::move(r));
    json e{{"i_in", make_point(s, pts[k]).i_in}, {"branch_count", counts[k]}};
    if (!errors[k].empty()) e["error"] = errors[k];
    per_point.push_back(e);
  }
  const std::string path = file_for(s, 0, 1);
  t.write_file(path);
  res.files.push_back(path);
  entry["points"] = per_point;
  if (solver) {
    json regions = json::array();
    for (const auto& r : find_turning_points(solver->curve()).regions) regions.push_back(region_json(r));
    entry["regions"] = regions;
  }
  res.summary["branches"] = entry;
}

void run_cpa_scan(const Scenario& s, ScenarioResult& res) {
  const auto pts = sweep_points(s);
  std::vector<std::vector<std::string>> rows(pts.size());
  std::vector<json> found(pts.size());
  for_each_index(pts.size(), [&](std::size_t k) {
    Point pt = make_point(s, pts[k]);
    const double dp = pt.params.delta_p;
    try {
      const CpaPoint c = find_cpa_point(dp, pt.params);
      rows[k] = {fmt(dp), fmt(c.delta_ac), fmt(c.i_c), fmt(c.i_in), c.multistable ? "1" : "0", ""};
      found[k] = {{"delta_p", dp}, {"delta_ac", c.delta_ac}, {"i_c", c.i_c},
                  {"i_in", c.i_in}, {"multistable", c.multistable}};
    } catch (const std::exception& e) {
      rows[k] = {fmt(dp), "nan", "nan", "nan", "", e.what()};
    }
  });
  CsvTable t({"delta_p", "delta_ac", "i_c", "i_in", "multistable", "error"});
  json points = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    t.add_row(std::move(rows[k]));
    if (!found[k].is_null()) points.push_back(found[k]);
  }
  const std::string path = file_for(s, 0, 1);
  t.write_file(path);
  res.files.push_back(path);
  res.summary["cpa_points"] = points;
}

void run_cpa_window(const Scenario& s, ScenarioResult& res) {
  const auto pts = sweep_points(s);
  std::vector<std::string> header;
  if (s.sweep) header.push_back(s.sweep->variable);
  for (const char* h : {"lower", "upper", "found", "truncated", "n_gaps", "error"}) header.push_back(h);
  CsvTable t(header);
  json windows = json::array();
  for (const auto& v : pts) {
    std::vector<std::string> row;
    if (v) row.push_back(fmt(*v));
    json w;
    if (v) w[s.sweep->variable] = *v;
    try {
      const Point pt = make_point(s, v);
      const CpaWindow cw = cpa_window(pt.params);
      row.insert(row.end(), {fmt(cw.lower), fmt(cw.upper), cw.found ? "1" : "0",
                             cw.truncated ? "1" : "0", std::to_string(cw.gaps.size()), ""});
      w["found"] = cw.found;
      if (cw.found) {
        w["lower"] = cw.lower;
        w["upper"] = cw.upper;
        w["truncated"] = cw.truncated;
        json gaps = json::array();
        for (const auto& g : cw.gaps) gaps.push_back({g.first, g.second});
        w["gaps"] = gaps;
      }
    } catch (const std::exception& e) {
      row.insert(row.end(), {"nan", "nan", "0", "0", "0", e.what()});
      w["error"] = e.what();
    }
    t.add_row(std::move(row));
    windows.push_back(w);
  }
  const std::string path = file_for(s, 0, 1);
  t.write_file(path);
  res.files.push_back(path);
  res.summary["windows"] = windows;
  if (windows.size() == 1) res.summary["window"] = windows.front();
}

void run_ratio_scan(const Scenario& s, ScenarioResult& res) {
  const auto pts = sweep_points(s);
  std::vector<std::vector<std::string>> rows(pts.size());
  std::vector<json> entries(pts.size());
  for_each_index(pts.size(), [&](std::size_t k) {
    std::vector<std::string> row;
    if (pts[k]) row.push_back(fmt(*pts[k]));
    json e;
    if (pts[k]) e[s.sweep->variable] = *pts[k];
    const Point pt = make_point(s, pts[k]);
    const double dp = pt.params.delta_p;
    e["delta_p"] = dp;
    try {
      const RatioResult r = high_low_ratio(dp, pt.params);
      row.insert(row.end(), {fmt(dp), fmt(r.delta_ac), fmt(r.i_in), fmt(r.ratio), fmt(r.i_c_cpa),
                             fmt(r.i_c_high), std::to_string(r.n_branches), ""});
      e.update({{"delta_ac", r.delta_ac}, {"i_in", r.i_in}, {"ratio", r.ratio},
                {"n_branches", r.n_branches}});
    } catch (const std::exception& ex) {
      row.insert(row.end(), {fmt(dp), "nan", "nan", "nan", "nan", "nan", "0", ex.what()});
      e["error"] = ex.what();
    }
    rows[k] = std::move(row);
    entries[k] = e;
  });
  std::vector<std::string> header;
  if (s.sweep) header.push_back(s.sweep->variable);
  for (const char* h : {"delta_p", "delta_ac", "i_in", "ratio", "i_c_cpa", "i_c_high", "n_branches", "error"}) {
    header.push_back(h);
  }
  CsvTable t(header);
  json ratios = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    t.add_row(std::move(rows[k]));
    ratios.push_back(entries[k]);
  }
  const std::string path = file_for(s, 0, 1);
  t.write_file(path);
  res.files.push_back(path);
  res.summary["ratios"] = ratios;
}

}  // namespace

// --- public API ----------------------------------------------------------------

const char* to_string(Mode m) {
  for (const auto& [mode, name] : kModeNames) {
    if (mode == m) return name;
  }
  return "unknown";
}

Mode mode_from_string(const std::string& s) {
  for (const auto& [mode, name] : kModeNames) {
    if (s == name) return mode;
  }
  throw ScenarioError("unknown mode: " + s);
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
    v[i] = log_spacing ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                       : start + f * (stop - start);
  }
  if (count > 1) {
    v.front() = start;
    v.back() = stop;
  }
  return v;
}

bool set_param_field(SystemParams& p, const std::string& name, double value) {
  double SystemParams::*const members[] = {
      &SystemParams::gamma, &SystemParams::gamma12, &SystemParams::kappa_l, &SystemParams::kappa_r,
      &SystemParams::tau,   &SystemParams::g,       &SystemParams::n_atoms, &SystemParams::omega1,
      &SystemParams::delta_p, &SystemParams::delta_ac, &SystemParams::delta1};
  for (std::size_t i = 0; i < std::size(kParamFields); ++i) {
    if (name == kParamFields[i]) {
      p.*members[i] = value;
      return true;
    }
  }
  return false;
}

void validate_scenario(const Scenario& s) {
  if (s.name.empty()) throw ScenarioError("scenario name must not be empty");
  try {
    validate_params(s.params);
  } catch (const ValidationError& e) {
    throw ScenarioError(std::string("invalid params: ") + e.what());
  }
  if (s.sweep) {
    const auto& sw = *s.sweep;
    if (!is_param_field(sw.variable) && !is_drive_field(sw.variable)) {
      throw ScenarioError("sweep variable '" + sw.variable + "' is not a parameter or drive field");
    }
    if (!(sw.start < sw.stop)) throw ScenarioError("sweep requires start < stop");
    if (sw.count < 2) throw ScenarioError("sweep requires count >= 2");
    if (sw.log_spacing && !(sw.start > 0)) throw ScenarioError("log sweep requires start > 0");
  }
  if ((s.mode == Mode::cpa_scan) && !s.sweep) throw ScenarioError("cpa-scan needs a sweep axis");
  if (!(s.i_c_min > 0 && s.i_c_max > s.i_c_min)) throw ScenarioError("need 0 < i_c_min < i_c_max");
  if (s.samples < 2) throw ScenarioError("samples must be >= 2");
  if (!(s.i_in >= 0)) throw ScenarioError("i_in must be nonnegative");
  if (!(s.horizon > 0 && s.dt > 0 && s.tol > 0)) throw ScenarioError("horizon, dt, tol must be positive");
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  Scenario s;
  try {
    s.name = j.at("name").get<std::string>();
    s.mode = mode_from_string(j.at("mode").get<std::string>());
    s.params = j.contains("params") ? params_from_json(j.at("params")) : default_params();
    if (j.contains("sweep") && !j.at("sweep").is_null()) {
      const auto& sw = j.at("sweep");
      SweepAxis a;
      a.variable = sw.at("variable").get<std::string>();
      a.start = sw.at("start").get<double>();
      a.stop = sw.at("stop").get<double>();
      a.count = sw.at("count").get<std::size_t>();
      const std::string spacing = sw.value("spacing", std::string("linear"));
      if (spacing != "linear" && spacing != "log") throw ScenarioError("spacing must be linear or log");
      a.log_spacing = spacing == "log";
      s.sweep = a;
    }
    s.phase = j.value("phase", 0.0);
    s.output_path = j.value("output_path", std::string("."));
    s.i_in = j.value("i_in", s.i_in);
    s.i_in_max = j.value("i_in_max", s.i_in_max);
    s.i_c_min = j.value("i_c_min", s.i_c_min);
    s.i_c_max = j.value("i_c_max", s.i_c_max);
    s.samples = j.value("samples", s.samples);
    s.tune_cpa = j.value("tune_cpa", s.tune_cpa);
    s.horizon = j.value("horizon", s.horizon);
    s.dt = j.value("dt", s.dt);
    s.tol = j.value("tol", s.tol);
    s.record_every = j.value("record_every", s.record_every);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  } catch (const ValidationError& e) {
    throw ScenarioError(std::string("invalid params: ") + e.what());
  }
  validate_scenario(s);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j{{"name", s.name},       {"params", params_to_json(s.params)},
         {"mode", to_string(s.mode)}, {"phase", s.phase},
         {"output_path", s.output_path}, {"i_in", s.i_in},
         {"i_in_max", s.i_in_max}, {"i_c_min", s.i_c_min},
         {"i_c_max", s.i_c_max}, {"samples", s.samples},
         {"tune_cpa", s.tune_cpa}, {"horizon", s.horizon},
         {"dt", s.dt},           {"tol", s.tol},
         {"record_every", s.record_every}};
  if (s.sweep) {
    j["sweep"] = {{"variable", s.sweep->variable}, {"start", s.sweep->start},
                  {"stop", s.sweep->stop},         {"count", s.sweep->count},
                  {"spacing", s.sweep->log_spacing ? "log" : "linear"}};
  }
  return j;
}

ScenarioResult run_scenario(const Scenario& s) {
  validate_scenario(s);
  std::error_code ec;
  std::filesystem::create_directories(s.output_path, ec);
  if (ec || !std::filesystem::is_directory(s.output_path)) {
    throw ScenarioError("unwritable output path: " + s.output_path);
  }

  ScenarioResult res;
  res.summary = {{"name", s.name}, {"mode", to_string(s.mode)}, {"scenario", scenario_to_json(s)}};
  switch (s.mode) {
    case Mode::transfer: run_per_point_files(s, res, &transfer_table); break;
    case Mode::dynamics: run_per_point_files(s, res, &dynamics_table); break;
    case Mode::approx_deviation: run_per_point_files(s, res, &approx_table); break;
    case Mode::branches: run_branches(s, res); break;
    case Mode::cpa_scan: run_cpa_scan(s, res); break;
    case Mode::cpa_window: run_cpa_window(s, res); break;
    case Mode::ratio_scan: run_ratio_scan(s, res); break;
  }
  res.summary["files"] = res.files;

  const auto summary_path = (std::filesystem::path(s.output_path) / (s.name + "_summary.json")).string();
  std::ofstream f(summary_path, std::ios::binary);
  if (!f) throw ScenarioError("unwritable output path: " + summary_path);
  f << res.summary.dump(2) << '\n';
  return res;
}

SystemParams figure_params() { return with_atom_number(default_params(), kFigureAtomNumber); }

namespace {

Scenario figure_transfer(const std::string& name, double dp, double dac) {
  Scenario s;
  s.name = name;
  s.params = figure_params();
  s.params.delta_p = dp;
  s.params.delta_ac = dac;
  s.mode = Mode::transfer;
  s.sweep = SweepAxis{"phase", 0.0, std::numbers::pi, 3, false};
  s.i_c_min = 1.0;
  s.i_c_max = 1e6;
  s.samples = 2000;
  return s;
}

Scenario figure_omega_sweep(const std::string& name, Mode mode, double dp) {
  Scenario s;
  s.name = name;
  s.params = figure_params();
  s.params.delta_p = dp;
  s.mode = mode;
  s.tune_cpa = mode == Mode::transfer;
  s.sweep = SweepAxis{"omega1", 0.5, 1.5, 3, false};
  s.i_c_min = 1.0;
  s.i_c_max = 1e6;
  s.samples = 2000;
  return s;
}

}  // namespace

std::vector<std::string> list_scenarios() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "cpa-window-default",
          "ratio-omega1-4", "cpa-scan-default", "deviation-default", "dynamics-fig2a"};
}

Scenario bundled_scenario(const std::string& name) {
  if (name == "fig2a") return figure_transfer(name, 6.5, -5.5);
  if (name == "fig2b") return figure_transfer(name, 6.0, -4.5);
  if (name == "fig3a") return figure_omega_sweep(name, Mode::transfer, 6.5);
  if (name == "fig3b") return figure_omega_sweep(name, Mode::ratio_scan, 6.0);
  if (name == "fig3c") return figure_omega_sweep(name, Mode::transfer, 6.0);
  if (name == "cpa-window-default") {
    Scenario s;
    s.name = name;
    s.params = default_params();
    s.mode = Mode::cpa_window;
    return s;
  }
  if (name == "ratio-omega1-4") {
    Scenario s;
    s.name = name;
    s.params = figure_params();
    s.params.delta_p = 6.0;
    s.params.omega1 = 4.0;
    s.mode = Mode::ratio_scan;
    return s;
  }
  if (name == "cpa-scan-default") {
    Scenario s;
    s.name = name;
    s.params = default_params();
    s.mode = Mode::cpa_scan;
    s.sweep = SweepAxis{"delta_p", 5.0, 7.5, 26, false};
    return s;
  }
  if (name == "deviation-default") {
    Scenario s;
    s.name = name;
    s.params = default_params();
    s.params.delta_p = 6.0;
    s.params.delta_ac = -4.5;
    s.mode = Mode::approx_deviation;
    s.i_c_min = 1e-8;
    s.i_c_max = 1e2;
    s.samples = 201;
    return s;
  }
  if (name == "dynamics-fig2a") {
    Scenario s;
    s.name = name;
    s.params = figure_params();
    s.params.delta_p = 6.5;
    s.params.delta_ac = -5.5;
    s.mode = Mode::dynamics;
    s.i_in = 30.0;
    s.horizon = 4000.0;
    s.dt = 0.01;
    s.tol = 1e-9;
    s.record_every = 100;
    return s;
  }
  throw ScenarioError("unknown bundled scenario: " + name);
}

}  // namespace lcpa
