#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lcpa/io.hpp"
#include "lcpa/scenario.hpp"

using namespace lcpa;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("lcpa_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream f(p);
  std::string line;
  while (std::getline(f, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("parameter json") {
  const auto p = params_from_json(json{{"delta_p", 6.0}, {"omega1", 0.5}});
  CHECK(p.delta_p == 6.0);
  CHECK(p.omega1 == 0.5);
  CHECK(p.g == default_params().g);
  CHECK(params_from_json(params_to_json(p)) == p);
  CHECK_THROWS(params_from_json(json{{"detla_p", 6.0}}));
  CHECK_THROWS_AS(params_from_json(json{{"tau", 0.0}}), ValidationError);
}

TEST_CASE("bundled scenario list") {
  const auto names = list_scenarios();
  for (const char* want : {"fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "cpa-window-default"}) {
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& n : names) {
    const auto s = bundled_scenario(n);
    CHECK(s.name == n);
    CHECK_NOTHROW(validate_scenario(s));
    CHECK(scenario_to_json(scenario_from_json(scenario_to_json(s))) == scenario_to_json(s));
  }
  CHECK_THROWS_AS(bundled_scenario("nope"), ScenarioError);
}

TEST_CASE("scenario validation") {
  Scenario s = bundled_scenario("fig2b");
  s.sweep->variable = "colour";
  CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  s = bundled_scenario("fig2b");
  s.sweep->count = 1;
  CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  s = bundled_scenario("fig2b");
  std::swap(s.sweep->start, s.sweep->stop);
  CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(json{{"name", "x"}, {"mode", "bogus"}}), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(json{{"name", "x"}, {"mode", "transfer"}, {"params", {{"gamma", -1}}}}),
                  ScenarioError);
}

TEST_CASE("fig2b writes three curves and the pi curve reflects everything") {
  auto s = bundled_scenario("fig2b");
  const auto dir = scratch("fig2b");
  s.output_path = dir.string();
  const auto res = run_scenario(s);
  REQUIRE(res.files.size() == 3);
  const auto rows = read_csv(res.files[2]);
  REQUIRE(rows.size() > 2);
  CHECK(rows[0] == std::vector<std::string>{"i_c", "i_in", "i_out_l", "i_out_r", "re_alpha", "im_alpha",
                                            "stability"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][2] == rows[i][1]);
    CHECK(rows[i][3] == rows[i][1]);
  }
  CHECK(fs::exists(dir / "fig2b_summary.json"));
  const json summary = json::parse(slurp(dir / "fig2b_summary.json"));
  CHECK(summary["points"][0]["regions"].size() == 1);
}

TEST_CASE("re-running gives byte-identical output") {
  auto s = bundled_scenario("fig3c");
  const auto a = scratch("rerun_a"), b = scratch("rerun_b");
  s.output_path = a.string();
  const auto ra = run_scenario(s);
  s.output_path = b.string();
  const auto rb = run_scenario(s);
  REQUIRE(ra.files.size() == rb.files.size());
  for (std::size_t i = 0; i < ra.files.size(); ++i) {
    CHECK(slurp(ra.files[i]) == slurp(rb.files[i]));
  }
}

TEST_CASE("fig3b ratios and default window") {
  auto s = bundled_scenario("fig3b");
  s.output_path = scratch("fig3b").string();
  const auto r = run_scenario(s);
  const double want[] = {0.79, 0.85, 0.89};
  REQUIRE(r.summary["ratios"].size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(r.summary["ratios"][k]["ratio"].get<double>() - want[k]) <= 0.02);

  auto w = bundled_scenario("cpa-window-default");
  w.output_path = scratch("window").string();
  const auto rw = run_scenario(w);
  CHECK(std::abs(rw.summary["window"]["lower"].get<double>() + 7.1) <= 0.2);
  CHECK(std::abs(rw.summary["window"]["upper"].get<double>() - 7.1) <= 0.2);
}

TEST_CASE("per-row errors do not abort a sweep") {
  Scenario s;
  s.name = "scan";
  s.params = default_params();
  s.mode = Mode::cpa_scan;
  s.sweep = SweepAxis{"delta_p", 6.0, 8.0, 3, false};
  s.output_path = scratch("scan").string();
  const auto res = run_scenario(s);
  const auto rows = read_csv(res.files.at(0));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"delta_p", "delta_ac", "i_c", "i_in", "multistable", "error"});
  CHECK(rows[1].size() == 5);  // empty trailing error cell
  CHECK(rows[3][5].find("no CPA") != std::string::npos);
}

TEST_CASE("branches and dynamics outputs") {
  Scenario s;
  s.name = "br";
  s.params = figure_params();
  s.params.delta_p = 6.0;
  s.params.delta_ac = -4.5;
  s.params.omega1 = 0.5;
  s.mode = Mode::branches;
  s.sweep = SweepAxis{"i_in", 60.0, 140.0, 5, false};
  s.output_path = scratch("br").string();
  auto res = run_scenario(s);
  auto rows = read_csv(res.files.at(0));
  CHECK(rows[0] == std::vector<std::string>{"i_in", "branch_index", "i_c", "i_out_l", "i_out_r", "stability"});
  CHECK(rows.size() == 1 + 1 + 3 + 3 + 3 + 1);  // bistable over roughly [72, 127]

  s.name = "dyn";
  s.mode = Mode::dynamics;
  s.sweep.reset();
  s.i_in = 30.0;
  s.dt = 0.01;
  s.horizon = 50.0;
  res = run_scenario(s);
  rows = read_csv(res.files.at(0));
  CHECK(rows[0] == std::vector<std::string>{"t", "re_alpha", "im_alpha", "rho11", "rho22", "rho33", "abs_rho13"});
  CHECK(rows.size() > 2);
}

TEST_CASE("unwritable output path") {
  auto s = bundled_scenario("cpa-window-default");
  const auto blocker = scratch("blocker");
  { std::ofstream(blocker.string()) << "x"; }
  s.output_path = (blocker / "sub").string();
  CHECK_THROWS_AS(run_scenario(s), ScenarioError);
  fs::remove(blocker);
}

}
