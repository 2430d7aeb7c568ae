#pragma once

// Scenario files: a named operation applied to JSON inputs, producing a deterministic
// report, optional CSV tables and an exit code.

#include "coarse/io.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

struct Check {
  std::string name;
  bool holds = false;
};

/// What an operation hands back: report data, asserted properties and CSV tables.
struct Outcome {
  Json data = Json::object();
  std::vector<Check> checks;
  std::vector<CsvTable> tables;
  std::map<std::string, Json> artifacts;  // e.g. "approximation"

  void check(std::string name, bool holds) { checks.push_back({std::move(name), holds}); }
  bool passed() const;
};

/// Resolved inputs of one run. File references in "inputs" are already loaded.
struct Context {
  Json inputs = Json::object();
  Json params = Json::object();
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultEnumerationCap;
  std::filesystem::path base_dir;

  const Json& input(const std::string& key) const;
  bool has_input(const std::string& key) const { return inputs.contains(key); }
  template <class T>
  T param(const std::string& key, T fallback) const {
    return params.contains(key) ? params.at(key).get<T>() : fallback;
  }
};

using Operation = std::function<Outcome(const Context&)>;

/// Operation ids such as "metric.validate" or "birkhoff.length", sorted.
const std::map<std::string, Operation>& operations();

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
};

struct RunResult {
  int exit_code = kExitInput;
  std::string name;
  std::string operation;
  Json report;
  std::vector<CsvTable> tables;
  std::map<std::string, Json> artifacts;
};

/// Scenario object: {"name", "operation", "inputs": {key: object | "file.json"},
/// "params": {...}, "seed", "cap", "outputs": {"report": path, "csv": path}}.
/// Never throws; input problems become exit code 2 with an "error" entry.
RunResult run_scenario(const Json& scenario, const std::filesystem::path& base_dir, const Overrides& overrides = {});
RunResult run_scenario_file(const std::filesystem::path& file, const Overrides& overrides = {});

/// Report as pretty-printed JSON text (trailing newline).
std::string report_text(const RunResult& result);

/// Writes what the scenario's "outputs" names, relative to `out_dir`: "report", "csv" (a path
/// for the first table or {table name: path}) and any artifact by name.
void write_outputs(const RunResult& result, const Json& outputs, const std::filesystem::path& out_dir);

struct SuiteEntry {
  std::string scenario;  // file name
  RunResult result;
  double runtime_seconds = 0;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  int exit_code() const;
};

/// Runs every *.json scenario in `dir` (sorted by file name, in parallel), writing
/// <stem>.report.json for each plus summary.csv (scenario, operation, result, runtime)
/// and summary.json (without runtimes) into `out_dir`.
SuiteResult run_suite(const std::filesystem::path& dir, const std::filesystem::path& out_dir,
                      const Overrides& overrides = {});

}  // namespace coarse
