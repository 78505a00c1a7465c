#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "lcpa/params.hpp"

namespace lcpa {

/// JSON object with exactly the SystemParams field names. Missing fields take
/// the defaults; unknown fields are rejected. The result is validated.
SystemParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SystemParams& p);

/// Fixed formatting for all tabular output: 12 significant digits, '.'
/// decimal separator regardless of locale.
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& os) const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Quotes a CSV cell when it contains a separator, quote, or newline.
std::string csv_escape(const std::string& cell);

}  // namespace lcpa
