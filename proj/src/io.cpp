#include "lcpa/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lcpa {

namespace {

struct Field {
  const char* name;
  double SystemParams::*member;
};

constexpr Field kFields[] = {
    {"gamma", &SystemParams::gamma},     {"gamma12", &SystemParams::gamma12},
    {"kappa_l", &SystemParams::kappa_l}, {"kappa_r", &SystemParams::kappa_r},
    {"tau", &SystemParams::tau},         {"g", &SystemParams::g},
    {"n_atoms", &SystemParams::n_atoms}, {"omega1", &SystemParams::omega1},
    {"delta_p", &SystemParams::delta_p}, {"delta_ac", &SystemParams::delta_ac},
    {"delta1", &SystemParams::delta1},
};

}  // namespace

SystemParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("params", "expected a JSON object");
  SystemParams p = default_params();
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& f : kFields) {
      if (key == f.name) {
        if (!value.is_number()) throw ValidationError(key, "must be a number");
        p.*f.member = value.get<double>();
        known = true;
        break;
      }
    }
    if (!known) throw ValidationError(key, "unknown parameter");
  }
  return validate_params(p);
}

nlohmann::json params_to_json(const SystemParams& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& f : kFields) j[f.name] = p.*f.member;
  return j;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  // snprintf honours LC_NUMERIC; normalise in case a caller changed it
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::logic_error("CsvTable: row width mismatch");
  rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& os) const {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cells[i]);
    }
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void CsvTable::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  write(f);
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace lcpa
