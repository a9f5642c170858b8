#pragma once

// Experiment matrix: scenarios x strategies x replicates. Replicate i of a
// scenario uses seed base_seed + i for every strategy, so all strategies see
// the same deployment (paired comparison).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "woac/config.hpp"
#include "woac/simulation.hpp"

namespace woac {

struct ExperimentPlan {
  std::vector<ScenarioConfig> scenarios;
  std::vector<std::string> strategies;
  int replicates = 20;
  std::uint64_t base_seed = 1;
  RadioParams radio;
  StrategyParams params;
  Checkpoints checkpoints;
  int threads = 0;         // 0 -> hardware concurrency
  bool keep_runs = false;  // retain every SimulationResult in the output

  static ExperimentPlan from_config(const Config& config);
  void validate() const;
};

struct ReplicateRecord {
  std::string scenario;
  std::string strategy;
  int replicate = 0;
  std::uint64_t seed = 0;
  int fnd = 0;
  int lnd = 0;
  bool fnd_censored = false;
  bool lnd_censored = false;
  std::optional<double> energy_at;
  std::optional<std::int64_t> throughput_at;
};

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
  int count = 0;        // values that were defined
};

Stat summarize(const std::vector<double>& values);

struct CellSummary {
  std::string scenario;
  std::string strategy;
  std::string label;
  int replicates = 0;
  Stat fnd, lnd, energy_at, throughput_at;
};

/// Replicate-averaged per-round curves for one scenario; one row per strategy.
struct ScenarioSeries {
  std::string scenario;
  int node_count = 0;
  std::vector<std::string> strategies;
  std::vector<std::vector<double>> residual;    // J
  std::vector<std::vector<double>> dead;        // nodes
  std::vector<std::vector<double>> throughput;  // bits/round
};

struct ExperimentResult {
  std::vector<ReplicateRecord> replicates;  // ordered by (scenario, strategy, replicate)
  std::vector<CellSummary> cells;           // ordered by (scenario, strategy)
  std::vector<ScenarioSeries> series;
  std::vector<SimulationResult> runs;       // same order as replicates, if keep_runs
  Checkpoints checkpoints;
};

/// Runs every cell. A failing run aborts with std::runtime_error; when
/// `output_dir` is given a partial-results manifest is written first.
ExperimentResult run_experiment(const ExperimentPlan& plan,
                                const std::filesystem::path& output_dir = {});

std::string summary_csv(const ExperimentResult& result);
std::string replicates_csv(const ExperimentResult& result);

/// summary.csv, replicates.csv, optional layouts/ (needs keep_runs) and
/// manifest.json carrying `notes`.
void write_experiment_outputs(const ExperimentResult& result, const ExperimentPlan& plan,
                              const std::filesystem::path& dir, bool dump_layouts,
                              const std::vector<std::string>& notes = {});

struct PlotReport {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> notes;
};

/// Residual energy, dead nodes and throughput versus round: one SVG chart per
/// scenario and metric with all strategies overlaid, plus the CSV behind each.
PlotReport emit_plots(const ExperimentResult& result, const std::filesystem::path& dir);

std::string line_chart_svg(const std::string& title, const std::string& y_label,
                           const std::vector<std::string>& names,
                           const std::vector<std::vector<double>>& series);

}  // namespace woac
