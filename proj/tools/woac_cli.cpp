// woac: run a single simulation, an experiment plan, or validate a config.
//
// Exit status: 0 success, 1 usage error, 2 configuration error, 3 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "woac/config.hpp"
#include "woac/errors.hpp"
#include "woac/harness.hpp"
#include "woac/simulation.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Invocation {
  std::string config_path;
  std::optional<std::string> strategy;
  std::optional<std::uint64_t> seed;
  std::optional<int> rounds;
  std::optional<std::string> out;
  std::vector<std::string> overrides;
};

void add_common(CLI::App& cmd, Invocation& inv) {
  cmd.add_option("--config", inv.config_path, "configuration file (JSON); defaults if omitted");
  cmd.add_option("--strategy", inv.strategy, "dt | leach | leach-c | pso | woa");
  cmd.add_option("--seed", inv.seed, "seed (base seed for experiments)");
  cmd.add_option("--rounds", inv.rounds, "max rounds for every scenario");
  cmd.add_option("--out", inv.out, "output directory");
  cmd.add_option("--set", inv.overrides, "override as key=value (repeatable)");
}

woac::Config resolve(const Invocation& inv, bool experiment, nlohmann::ordered_json* doc) {
  std::vector<std::string> overrides;
  if (inv.strategy) {
    overrides.push_back(experiment ? fmt::format("strategies=[\"{}\"]", *inv.strategy)
                                   : fmt::format("strategy=\"{}\"", *inv.strategy));
  }
  if (inv.seed) overrides.push_back(fmt::format("seed={}", *inv.seed));
  if (inv.out) overrides.push_back(fmt::format("output_dir={}", nlohmann::json(*inv.out).dump()));
  overrides.insert(overrides.end(), inv.overrides.begin(), inv.overrides.end());

  auto config = woac::load_config(inv.config_path, overrides, doc);
  if (inv.rounds) {
    if (*inv.rounds < 0) throw woac::ConfigError("--rounds must be >= 0", "--rounds");
    for (auto& s : config.scenarios) s.max_rounds = *inv.rounds;
    if (doc) *doc = woac::config_to_document(config);
  }
  return config;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_validate(const Invocation& inv) {
  nlohmann::ordered_json doc;
  const auto config = resolve(inv, false, &doc);
  std::cout << woac::describe_config(config) << "\nresolved configuration:\n"
            << doc.dump(2) << "\n";
  return 0;
}

int cmd_run(const Invocation& inv) {
  const auto config = resolve(inv, false, nullptr);
  const auto& scenario = config.scenarios.front();
  woac::ScenarioConfig sc = scenario;
  sc.seed = config.seed;
  const auto result =
      woac::run_simulation(sc, config.strategy, config.params, config.radio, config.checkpoints);
  fs::create_directories(config.output_dir);
  write_file(config.output_dir / "rounds.csv", woac::rounds_to_csv(result.rounds));
  write_file(config.output_dir / "summary.json", woac::summary_to_json(result, config.checkpoints));
  write_file(config.output_dir / "layout.csv", woac::layout_to_csv(result.layout));
  write_file(config.output_dir / "events.csv", woac::events_to_csv(result.events));
  std::cout << fmt::format("{} / {} seed {}: FND {}{} LND {}{} over {} rounds -> {}\n",
                           result.scenario, result.strategy, result.seed, result.summary.fnd,
                           result.summary.fnd_censored ? "+" : "", result.summary.lnd,
                           result.summary.lnd_censored ? "+" : "", result.rounds.size(),
                           config.output_dir.string());
  return 0;
}

int cmd_experiment(const Invocation& inv) {
  const auto config = resolve(inv, true, nullptr);
  auto plan = woac::ExperimentPlan::from_config(config);
  plan.keep_runs = config.dump_layouts;
  const auto result = woac::run_experiment(plan, config.output_dir);
  const auto plots = woac::emit_plots(result, config.output_dir / "plots");
  woac::write_experiment_outputs(result, plan, config.output_dir, config.dump_layouts, plots.notes);
  for (const auto& c : result.cells) {
    std::cout << fmt::format("{:<16} {:<12} FND {:8.1f} LND {:8.1f}\n", c.scenario, c.label,
                             c.fnd.mean, c.lnd.mean);
  }
  std::cout << "outputs in " << config.output_dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-head selection energy simulator for wireless sensor networks"};
  app.require_subcommand(1);
  Invocation inv;
  auto* run = app.add_subcommand("run", "run one simulation and write rounds.csv + summary.json");
  auto* experiment = app.add_subcommand("experiment", "run the scenario x strategy x replicate matrix");
  auto* validate = app.add_subcommand("validate", "check a config and print the resolved parameters");
  for (auto* cmd : {run, experiment, validate}) add_common(*cmd, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(inv);
    if (run->parsed()) return cmd_run(inv);
    return cmd_experiment(inv);
  } catch (const woac::ConfigError& e) {
    std::cerr << "woac: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "woac: error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
