#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "scrollcurves/cli.hpp"

using namespace scrollcurves::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Golden {
  std::vector<std::string> args;
  std::string file;
};

const std::vector<Golden> kGoldens = {
    {{"surface", "1", "2", "--format", "json"}, "surface_1_2.json"},
    {{"surface", "2", "3", "--format", "json"}, "surface_2_3.json"},
    {{"cohom", "1", "2", "1", "2", "--format", "json"}, "cohom_1_2_1_2.json"},
    {{"cohom", "1", "3", "2", "1", "--format", "json"}, "cohom_1_3_2_1.json"},
    {{"cohom", "1", "2", "0", "0", "--format", "json"}, "cohom_1_2_0_0.json"},
    {{"curve", "1", "2", "1", "2", "--format", "json"}, "curve_1_2_1_2.json"},
    {{"curve", "1", "2", "4", "8", "--format", "json"}, "curve_1_2_4_8.json"},
    {{"curve", "1", "2", "1", "2"}, "curve_1_2_1_2.txt"},
    {{"curve", "1", "2", "1", "2", "--format", "csv"}, "curve_1_2_1_2.csv"},
    {{"cubic", "scan", "--cmax", "8", "--dmax", "20", "--format", "json"}, "cubic_scan_8_20.json"},
    {{"cubic", "apic", "0", "2", "1", "-1", "--format", "json"}, "cubic_apic_0_2.json"},
    {{"cubic", "link", "1,2,{2,3}", "1,2,{-2,-3}", "2", "--format", "json"}, "cubic_link_1_2.json"},
};

// Text output "  key: value" lines under "results:".
std::map<std::string, std::string> text_results(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == "results:") {
      inside = true;
      continue;
    }
    if (inside && line.rfind("  ", 0) != 0) break;
    if (inside) {
      const auto colon = line.find(": ");
      values[line.substr(2, colon - 2)] = line.substr(colon + 2);
    }
  }
  return values;
}

}  // namespace

TEST_CASE("golden outputs") {
  for (const Golden& g : kGoldens) {
    CAPTURE(g.file);
    const Outcome o = invoke(g.args);
    CHECK(o.code == kExitOk);
    CHECK(o.out == read_file(std::string(GOLDEN_DIR) + "/" + g.file));
  }
}

TEST_CASE("structured output is schema stable and round trips") {
  for (const Golden& g : kGoldens) {
    if (g.file.find(".json") == std::string::npos) continue;
    CAPTURE(g.file);
    const Json j = Json::parse(invoke(g.args).out);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "tables", "warnings"});
    const Report r = Report::from_json(j);
    CHECK(r.to_json() == j);
    CHECK(render_json(r) == invoke(g.args).out);
  }
}

TEST_CASE("text, csv and json carry the same numbers") {
  const std::vector<std::string> base{"curve", "1", "2", "4", "8"};
  auto with_format = [&](const std::string& f) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--format", f});
    return invoke(args).out;
  };
  const Json j = Json::parse(with_format("json"));
  const auto text = text_results(with_format("text"));
  for (const auto& [key, value] : j["results"].items()) {
    CAPTURE(key);
    REQUIRE(text.count(key) == 1);
    CHECK(text.at(key) == (value.is_string() ? value.get<std::string>() : value.dump()));
  }
  std::istringstream csv(with_format("csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,h0_ideal,h1_ideal,h1_structure");
  const Json rows = j["tables"]["curve"]["rows"];
  std::size_t i = 0;
  while (std::getline(csv, line)) {
    REQUIRE(i < rows.size());
    std::string expected;
    for (std::size_t k = 0; k < rows[i].size(); ++k) expected += (k ? "," : "") + rows[i][k].dump();
    CHECK(line == expected);
    ++i;
  }
  CHECK(i == rows.size());
}

TEST_CASE("commands without tables emit name,value csv") {
  const Outcome o = invoke({"surface", "1", "2", "--format", "csv"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.rfind("name,value\ndeg_X,3\nm2_class,\"[1,1]\"\n", 0) == 0);
}

TEST_CASE("format may precede the subcommand") {
  CHECK(invoke({"--format", "json", "surface", "1", "2"}).out == invoke({"surface", "1", "2", "--format", "json"}).out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"surface", "1", "1"}).code == kExitInvalidInput);
  CHECK(invoke({"surface", "0", "2"}).code == kExitInvalidInput);
  CHECK(invoke({"surface", "1", "x"}).code == kExitInvalidInput);
  CHECK(invoke({"surface", "1", "1000001"}).code == kExitInvalidInput);
  CHECK(invoke({"cohom", "1", "2", "3"}).code == kExitInvalidInput);
  CHECK(invoke({}).code == kExitInvalidInput);
  CHECK(invoke({"surface", "1", "2", "--format", "xml"}).code == kExitInvalidInput);
  CHECK(invoke({"curve", "1", "2", "2", "1"}).code == kExitPrecondition);
  CHECK(invoke({"cubic", "apic", "1", "1"}).code == kExitInvalidInput);
  CHECK(invoke({"cubic", "link", "0,0", "0,0", "0"}).code == kExitPrecondition);
  CHECK(invoke({"cubic", "residual", "1,0"}).code == kExitPrecondition);
  CHECK(invoke({"cubic", "scan", "--cmax", "201"}).code == kExitInvalidInput);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("curve needs m when the linkage degree is not a positive integer") {
  // On S(2,3) a fiber has 2 C.M2 / h.M2 = 6/12.
  const Outcome o = invoke({"curve", "2", "3", "0", "1"});
  CHECK(o.code == kExitPrecondition);
  CHECK(o.err.find("linkage degree") != std::string::npos);
  CHECK(o.err.find("1/2") != std::string::npos);
}

TEST_CASE("given m and nmax") {
  const Outcome o = invoke({"curve", "1", "2", "1", "2", "--m", "2", "--nmax", "3", "--format", "json"});
  REQUIRE(o.code == kExitOk);
  const Json j = Json::parse(o.out);
  CHECK(j["results"]["m_source"] == "given");
  CHECK(j["tables"]["curve"]["rows"].size() == 4);
  CHECK(j["warnings"].empty());
}

TEST_CASE("cubic subcommands") {
  const Json apic = Json::parse(invoke({"cubic", "apic", "0", "2", "1", "-1", "--format", "json"}).out);
  CHECK(apic["results"]["alpha_reduced"] == "{}");
  CHECK(apic["results"]["effective"] == true);
  CHECK(apic["results"]["contains_preserved"] == false);

  const Json link = Json::parse(invoke({"cubic", "link", "1,2,{2,3}", "1,2,{-2,-3}", "2", "--format", "json"}).out);
  CHECK(link["results"]["linked"] == true);

  const Json residual = Json::parse(invoke({"cubic", "residual", "0,1,{5}", "--format", "json"}).out);
  CHECK(residual["results"]["residual"] == "(1,1,{(-5)})");
  CHECK(residual["results"]["linked"] == true);
  CHECK(residual["results"]["residual_contains_preserved"] == true);

  // After "--" every token is positional, so the format goes first.
  const Json negative = Json::parse(invoke({"--format", "json", "cubic", "apic", "0", "1", "--", "-inf"}).out);
  CHECK(negative["results"]["alpha_reduced"] == "{inf}");
}
