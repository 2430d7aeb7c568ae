// coarse: command-line front end over the scenario runner.

#include "coarse/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using coarse::Json;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  std::string out;
  std::string format = "json";
};

// Inline JSON when the text starts with '{' or '[', otherwise a JSON file.
Json load_value(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw coarse::InputError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(text);
  if (!in) throw coarse::InputError("cannot open " + text);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw coarse::InputError("malformed JSON in " + text + ": " + e.what());
  }
}

Json param_value(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    return text;
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

int emit(const coarse::RunResult& r, const Globals& g) {
  if (r.exit_code == coarse::kExitInput) std::cerr << "error: " << r.report.value("error", std::string()) << "\n";
  if (g.format == "csv" && r.exit_code != coarse::kExitInput) {
    if (r.tables.empty()) {
      std::cerr << "error: operation " << r.operation << " has no CSV table\n";
      return coarse::kExitInput;
    }
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      const std::string text = coarse::to_csv(r.tables[i]);
      if (g.out.empty()) {
        std::cout << (i ? "\n" : "") << text;
      } else {
        fs::path path = g.out;
        if (i) path.replace_filename(path.stem().string() + "." + r.tables[i].name + path.extension().string());
        write_file(path, text);
      }
    }
  } else if (g.out.empty()) {
    std::cout << coarse::report_text(r);
  } else {
    write_file(g.out, coarse::report_text(r));
  }
  return r.exit_code;
}

coarse::Overrides overrides(const Globals& g) { return {g.seed, g.cap}; }

struct Field {
  std::string key;
  std::string help;
};

// One leaf command: --<input> options become scenario inputs, --<param> options params.
class OpCommand {
 public:
  OpCommand(CLI::App* parent, Globals& g, const std::string& name, std::string op, const std::string& help,
            std::vector<Field> inputs, std::vector<Field> params, std::vector<std::string> required = {})
      : globals_(g), op_(std::move(op)) {
    app_ = parent->add_subcommand(name, help);
    for (const auto& f : inputs) {
      auto* o = app_->add_option("--" + f.key, inputs_[f.key], f.help + " (JSON file or inline JSON)");
      if (std::find(required.begin(), required.end(), f.key) != required.end()) o->required();
    }
    for (const auto& f : params) app_->add_option("--" + f.key, params_[f.key], f.help);
    app_->callback([this] { code_ = execute(); });
  }

  CLI::App* app() { return app_; }
  void set_save(const std::string& artifact) {
    artifact_ = artifact;
    app_->add_option("--save", save_, "Write the " + artifact + " JSON here");
  }
  std::optional<int> code() const { return code_; }

 private:
  int execute() {
    Json scenario{{"name", op_}, {"operation", op_}, {"inputs", Json::object()}, {"params", Json::object()}};
    try {
      for (const auto& [key, text] : inputs_) {
        if (!text.empty()) scenario["inputs"][key] = load_value(text);
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return coarse::kExitInput;
    }
    for (const auto& [key, text] : params_) {
      if (!text.empty()) scenario["params"][key] = param_value(text);
    }
    auto result = coarse::run_scenario(scenario, fs::current_path(), overrides(globals_));
    if (!save_.empty() && result.artifacts.contains(artifact_)) {
      write_file(save_, result.artifacts.at(artifact_).dump() + "\n");
    }
    return emit(result, globals_);
  }

  Globals& globals_;
  std::string op_;
  CLI::App* app_ = nullptr;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> params_;
  std::string artifact_;
  std::string save_;
  std::optional<int> code_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-scale computations in coarse geometry of groups and metric spaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomised samplers (echoed in reports)");
  app.add_option("--cap", g.cap, "Enumeration cap for permutation groups");
  app.add_option("--out", g.out, "Output file (report or first CSV table); directory for run and suite");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::unique_ptr<OpCommand>> ops;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& op, const std::string& help,
                 std::vector<Field> inputs, std::vector<Field> params, std::vector<std::string> required = {}) {
    ops.push_back(std::make_unique<OpCommand>(parent, g, name, op, help, std::move(inputs), std::move(params),
                                              std::move(required)));
    return ops.back().get();
  };

  auto* metric = app.add_subcommand("metric", "Finite metric spaces and Lipschitz constants")->require_subcommand(1);
  add(metric, "validate", "metric.validate", "Check the metric axioms", {{"space", "Space"}}, {}, {"space"});
  add(metric, "quotient", "metric.quotient", "Identify points at distance 0", {{"space", "Pseudometric space"}}, {},
      {"space"});
  add(metric, "fit", "metric.fit", "Optimal Lipschitz constants of a map",
      {{"x", "Domain space"}, {"y", "Codomain space"}, {"map", "Images of the domain points"}},
      {{"delta", "Short-distance threshold"}}, {"x", "y", "map"});
  add(metric, "qi", "metric.qi", "Quasi-isometry constants of a pair of maps",
      {{"x", "Space X"}, {"y", "Space Y"}, {"forward", "Map X to Y"}, {"backward", "Map Y to X"}}, {},
      {"x", "y", "forward", "backward"});

  auto* birkhoff = app.add_subcommand("birkhoff", "Neighbourhood chains and Birkhoff length functions");
  birkhoff->require_subcommand(1);
  add(birkhoff, "chain", "birkhoff.chain", "Validate a chain", {{"group", "Group"}, {"chain", "Chain"}}, {},
      {"group", "chain"});
  add(birkhoff, "length", "birkhoff.length", "Compute the length function (CSV: element, length, L)",
      {{"group", "Group"}, {"chain", "Chain"}}, {}, {"group", "chain"});
  add(birkhoff, "minimality", "birkhoff.minimality", "Check eps n l(g) <= l(g^n) <= n l(g) on U",
      {{"group", "Group"}, {"chain", "Chain"}, {"generators", "Word-length generators instead of a chain"},
       {"u", "Elements of U"}},
      {{"eps", "Lower-bound constant"}}, {"group", "u"});
  add(birkhoff, "geodesic", "birkhoff.geodesic", "Large-scale geodesic check", {{"space", "Space"}},
      {{"k", "Step bound K"}}, {"space"});

  add(&app, "wordmetric", "wordmetric", "Word metric: distance table and growth (CSV)",
      {{"group", "Group"}, {"generators", "Generator ids"}}, {{"n_max", "Largest growth radius"}},
      {"group", "generators"});

  auto* amalgam = app.add_subcommand("amalgam", "Metric amalgamation")->require_subcommand(1);
  add(amalgam, "amalgamate", "amalgam.amalgamate", "Amalgamate B1 and B2 over A",
      {{"a", "Base"}, {"b1", "B1"}, {"b2", "B2"}, {"eta1", "A into B1"}, {"eta2", "A into B2"}}, {},
      {"a", "b1", "b2", "eta1", "eta2"});
  add(amalgam, "functoriality", "amalgam.functoriality", "Witness naturality along iota: B1 -> B1'",
      {{"a", "Base"}, {"b1", "B1"}, {"b1p", "B1'"}, {"b2", "B2"}, {"eta1", "A into B1"}, {"eta1p", "A into B1'"},
       {"eta2", "A into B2"}, {"iota", "B1 into B1'"}},
      {}, {"a", "b1", "b1p", "b2", "eta1", "eta1p", "eta2", "iota"});
  add(amalgam, "independence", "amalgam.independence", "Test b1 independent from b2 over abar",
      {{"space", "Space"}, {"abar", "Base tuple"}, {"b1", "First tuple"}, {"b2", "Second tuple"}}, {},
      {"space", "abar", "b1", "b2"});
  add(amalgam, "fraisse", "amalgam.fraisse", "Fraisse axioms on a capped catalog",
      {{"catalog", "Array of spaces (default: all isometry types within the caps)"}},
      {{"max_size", "Size cap"}, {"max_dist", "Distance cap"}});

  auto* urysohn = app.add_subcommand("urysohn", "Integral Urysohn space approximations")->require_subcommand(1);
  std::vector<Field> build_params{{"s", "Subset size"}, {"r", "Value cap"}, {"rounds", "Rounds"},
                                  {"hard_cap", "Point cap"}};
  add(urysohn, "build", "urysohn.build", "Build an approximation", {{"seed_space", "Seed space (default: one point)"}},
      build_params)
      ->set_save("approximation");
  auto check_params = build_params;
  check_params.push_back({"max_type_size", "Largest type size"});
  check_params.push_back({"max_distance", "Largest distance checked"});
  add(urysohn, "check", "urysohn.check", "Universality and path-metric checks",
      {{"approximation", "Saved approximation"}, {"seed_space", "Seed space when building"}}, check_params);
  add(urysohn, "embed", "urysohn.embed", "Embed a space",
      {{"approximation", "Saved approximation"}, {"target", "Space to embed"}}, build_params, {"target"});

  auto* group = app.add_subcommand("group", "Permutation groups")->require_subcommand(1);
  add(group, "enumerate", "group.enumerate", "Group order", {{"group", "Permutation group"}}, {}, {"group"});
  add(group, "orbit", "group.orbit", "Orbit and orbital type of a tuple (relative to abar if given)",
      {{"group", "Permutation group"}, {"tuple", "Tuple"}, {"abar", "Base tuple"}}, {}, {"group", "tuple"});
  add(group, "stabilizer", "group.stabilizer", "Pointwise stabiliser generators",
      {{"group", "Permutation group"}, {"abar", "Tuple"}}, {}, {"group", "abar"});
  add(group, "double-coset", "group.double_coset", "The three double-coset conditions",
      {{"group", "Permutation group"}, {"g", "g"}, {"f", "f"}, {"abar", "abar"}, {"bbar", "bbar"}}, {},
      {"group", "g", "f", "abar", "bbar"});
  add(group, "boundedness", "group.boundedness", "W_a within W_b F^-1 W_b F W_b",
      {{"group", "Permutation group"}, {"abar", "abar"}, {"bbar", "bbar"}, {"f", "Connectors"}}, {},
      {"group", "abar", "bbar", "f"});

  auto* action = app.add_subcommand("action", "Group actions on graphs")->require_subcommand(1);
  add(action, "verify", "action.verify", "Orbit-map containments for every (or one) base vertex",
      {{"action", "Action"}}, {{"base", "Base vertex"}, {"m_max", "Largest radius"}}, {"action"});
  add(action, "quotient", "action.quotient", "Validity and orbit counts", {{"action", "Action"}}, {}, {"action"});
  add(action, "coset-graph", "action.coset_graph", "Coset graph G/W with connectors F",
      {{"group", "Permutation group"}, {"subgroup", "Generators of W"}, {"connectors", "F"}}, {},
      {"group", "subgroup", "connectors"});

  auto* tree = app.add_subcommand("tree", "Truncated regular trees")->require_subcommand(1);
  add(tree, "independence", "tree.independence", "Independence axioms at the root", {},
      {{"valence", "Valence"}, {"depth", "Depth"}, {"samples", "Samples"}});

  std::string suite_dir;
  auto* suite = app.add_subcommand("suite", "Run every scenario in a directory");
  suite->add_option("dir", suite_dir, "Scenario directory")->required();
  std::optional<int> suite_code;
  suite->callback([&] {
    fs::path out = g.out.empty() ? fs::path("suite_out") : fs::path(g.out);
    try {
      auto r = coarse::run_suite(suite_dir, out, overrides(g));
      std::ifstream summary(out / "summary.csv");
      std::cout << summary.rdbuf();
      suite_code = r.exit_code();
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      suite_code = coarse::kExitInput;
    }
  });

  std::string scenario_file;
  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("scenario", scenario_file, "Scenario JSON")->required();
  std::optional<int> run_code;
  run->callback([&] {
    auto r = coarse::run_scenario_file(scenario_file, overrides(g));
    Json outputs;
    try {
      std::ifstream in(scenario_file);
      Json s = Json::parse(in);
      if (s.is_object() && s.contains("outputs")) outputs = s.at("outputs");
    } catch (const std::exception&) {
    }
    if (r.exit_code == coarse::kExitInput) std::cerr << "error: " << r.report.value("error", std::string()) << "\n";
    if (outputs.is_object() && !outputs.empty()) {
      coarse::write_outputs(r, outputs, g.out.empty() ? fs::current_path() : fs::path(g.out));
    } else {
      std::cout << coarse::report_text(r);
    }
    run_code = r.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : coarse::kExitInput;
  }
  if (suite_code) return *suite_code;
  if (run_code) return *run_code;
  for (const auto& op : ops) {
    if (op->code()) return *op->code();
  }
  return coarse::kExitInput;
}
