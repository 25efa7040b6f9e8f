#include "scrollcurves/report.hpp"

#include <sstream>

namespace scrollcurves::cli {
namespace {

// Nested objects flatten to dotted keys; everything else is a leaf.
void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace_back(prefix, node);
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "n/a";
  return value.dump();
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  Json tables_json = Json::object();
  for (const ReportTable& t : tables) {
    tables_json[t.name] = Json{{"columns", t.columns}, {"rows", t.rows}};
  }
  j["tables"] = tables_json;
  j["warnings"] = warnings;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  for (const auto& [name, t] : j.at("tables").items()) {
    r.tables.push_back(ReportTable{name, t.at("columns").get<std::vector<std::string>>(),
                                   t.at("rows").get<std::vector<std::vector<Int>>>()});
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Text:
      return render_text(report);
    case Format::Csv:
      return render_csv(report);
    case Format::Json:
      return render_json(report);
  }
  return {};
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << report.command << "\n";
  std::vector<std::pair<std::string, Json>> entries;
  flatten(report.inputs, "", entries);
  os << "inputs:\n";
  for (const auto& [key, value] : entries) os << "  " << key << ": " << scalar_text(value) << "\n";
  entries.clear();
  flatten(report.results, "", entries);
  os << "results:\n";
  for (const auto& [key, value] : entries) os << "  " << key << ": " << scalar_text(value) << "\n";
  for (const ReportTable& t : report.tables) {
    os << "table " << t.name << ":\n ";
    for (const std::string& col : t.columns) os << " " << col;
    os << "\n";
    for (const auto& row : t.rows) {
      os << " ";
      for (Int v : row) os << " " << v;
      os << "\n";
    }
  }
  if (!report.warnings.empty()) {
    os << "warnings:\n";
    for (const std::string& w : report.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  if (report.tables.empty()) {
    std::vector<std::pair<std::string, Json>> entries;
    flatten(report.results, "", entries);
    os << "name,value\n";
    for (const auto& [key, value] : entries) os << csv_field(key) << "," << csv_field(scalar_text(value)) << "\n";
    return os.str();
  }
  bool first = true;
  for (const ReportTable& t : report.tables) {
    if (!first) os << "\n";
    first = false;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  }
  return os.str();
}

std::string render_json(const Report& report) { return report.to_json().dump(2) + "\n"; }

}  // namespace scrollcurves::cli
