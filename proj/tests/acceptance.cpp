// Acceptance criteria 1-9. Usage: acceptance <scenario dir> [criterion ...]
// Prints one PASS/FAIL line per criterion; exit code 0 iff all requested criteria pass.

#include "coarse/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using coarse::Json;

namespace {

struct Criterion {
  int number;
  const char* scenario;  // file in the scenario directory
  const char* title;
  double time_limit;     // seconds; 0 = none
};

const Criterion kCriteria[] = {
    {1, "c1_birkhoff_bounds.json", "Birkhoff bounds", 60},
    {2, "c2_lipschitz_splitting.json", "Lipschitz splitting", 0},
    {3, "c3_word_metric_oracle.json", "word-metric oracle", 0},
    {4, "c4_amalgamation.json", "amalgamation", 120},
    {5, "c5_urysohn.json", "Urysohn approximation", 300},
    {6, "c6_milnor_schwarz.json", "Milnor-Schwarz containments", 0},
    {7, "c7_double_coset.json", "double cosets", 0},
    {8, "c8_independence.json", "tree independence", 0},
};

std::string facts(const Json& data, std::initializer_list<const char*> keys) {
  std::string out;
  for (const char* k : keys) {
    if (!data.contains(k)) continue;
    out += std::string(out.empty() ? "" : " ") + k + "=" + data.at(k).dump();
  }
  return out;
}

std::string detail(int n, const Json& data) {
  switch (n) {
    case 1: return facts(data, {"instances", "largest_group", "elements_checked", "bound_failures", "axiom_failures"});
    case 2: return facts(data, {"instances", "splitting_failures", "literal_bound_violations"});
    case 3: return facts(data, {"pairs_checked", "metrics_checked", "cyclic_failures", "box_failures", "geodesic_failures"});
    case 4: return facts(data, {"instances", "invalid_metrics", "non_commuting_squares", "functoriality_witnessed"});
    case 5: return facts(data, {"points", "types", "types_embedded", "pairs_checked", "pairs_equal"});
    case 6: return facts(data, {"petersen_group_order"});
    case 7: return facts(data, {"instances", "largest_group", "agreeing"});
    case 8: return facts(data, {"automorphism_group_order", "samples"});
  }
  return {};
}

bool run_criterion(const Criterion& c, const fs::path& dir) {
  const auto start = std::chrono::steady_clock::now();
  auto r = coarse::run_scenario_file(dir / c.scenario);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = c.time_limit == 0 || seconds < c.time_limit;
  const bool pass = r.exit_code == coarse::kExitPass && in_time;
  std::ostringstream line;
  line << "criterion " << c.number << " " << (pass ? "PASS" : "FAIL") << " " << c.title << ": ";
  if (r.exit_code == coarse::kExitInput) {
    line << "error " << r.report.value("error", std::string());
  } else {
    line << "failed_checks=" << r.report.at("failed_checks").dump() << " " << detail(c.number, r.report.at("data"));
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, " time=%.2fs", seconds);
  line << timing;
  if (c.time_limit > 0) line << " limit=" << c.time_limit << "s";
  std::cout << line.str() << "\n";
  return pass;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool run_determinism(const fs::path& dir) {
  const fs::path base = fs::temp_directory_path() / ("coarse_determinism_" + std::to_string(::getpid()));
  fs::remove_all(base);
  coarse::run_suite(dir, base / "a");
  coarse::run_suite(dir, base / "b");
  std::size_t compared = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    const auto name = entry.path().filename();
    if (name == "summary.csv") continue;  // carries wall-clock runtimes
    ++compared;
    if (!fs::exists(base / "b" / name) || slurp(entry.path()) != slurp(base / "b" / name)) ++differing;
  }
  fs::remove_all(base);
  const bool pass = compared > 0 && differing == 0;
  std::cout << "criterion 9 " << (pass ? "PASS" : "FAIL") << " determinism: reports_compared=" << compared
            << " differing=" << differing << "\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <scenario dir> [criterion ...]\n";
    return 2;
  }
  const fs::path dir = argv[1];
  std::vector<int> wanted;
  for (int i = 2; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  bool all = true;
  for (int n : wanted) {
    if (n == 9) {
      all = run_determinism(dir) && all;
      continue;
    }
    bool found = false;
    for (const auto& c : kCriteria) {
      if (c.number == n) {
        all = run_criterion(c, dir) && all;
        found = true;
      }
    }
    if (!found) {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
  }
  return all ? 0 : 1;
}
