#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scrollcurves/checked.hpp"

namespace scrollcurves::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Int>> rows;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

/// Result of one CLI command. The structured form always carries the keys
/// command, inputs, results, tables and warnings, in that order.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<ReportTable> tables;
  std::vector<std::string> warnings;

  Json to_json() const;
  static Report from_json(const Json& j);

  friend bool operator==(const Report&, const Report&) = default;
};

std::string render(const Report& report, Format format);
std::string render_text(const Report& report);
/// Tables only, one block per table with its header row; commands without
/// tables emit their results as name,value rows.
std::string render_csv(const Report& report);
std::string render_json(const Report& report);

}  // namespace scrollcurves::cli
