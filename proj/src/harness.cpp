#include "woac/harness.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "woac/errors.hpp"

namespace woac {

namespace fs = std::filesystem;

ExperimentPlan ExperimentPlan::from_config(const Config& c) {
  ExperimentPlan p;
  p.scenarios = c.scenarios;
  p.strategies = c.strategies;
  p.replicates = c.replicates;
  p.base_seed = c.seed;
  p.radio = c.radio;
  p.params = c.params;
  p.checkpoints = c.checkpoints;
  p.threads = c.threads;
  return p;
}

void ExperimentPlan::validate() const {
  if (scenarios.empty()) throw ConfigError("plan: no scenarios");
  if (strategies.empty()) throw ConfigError("plan: no strategies");
  if (replicates < 1) throw ConfigError("plan: replicates must be at least 1");
  for (const auto& s : scenarios) s.validate();
  for (const auto& s : strategies) {
    if (!is_strategy_name(s)) throw ConfigError("plan: unknown strategy '" + s + "'");
  }
  radio.validate();
}

Stat summarize(const std::vector<double>& values) {
  Stat s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) {
    s.mean = std::nan("");
    s.stddev = std::nan("");
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

namespace {

struct Job {
  std::size_t scenario;
  std::size_t strategy;
  int replicate;
};

std::string label_of(const std::string& strategy) {
  return std::string(make_strategy(strategy, StrategyParams{}, 1, 1)->label());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_manifest(const fs::path& dir, const ExperimentPlan& plan, std::size_t completed,
                    std::size_t total, const std::string& error,
                    const std::vector<std::string>& notes = {}) {
  nlohmann::ordered_json m;
  m["status"] = error.empty() ? "complete" : "failed";
  if (!error.empty()) m["error"] = error;
  m["runs_completed"] = completed;
  m["runs_total"] = total;
  m["base_seed"] = plan.base_seed;
  m["replicates"] = plan.replicates;
  m["strategies"] = plan.strategies;
  auto names = nlohmann::ordered_json::array();
  for (const auto& s : plan.scenarios) names.push_back(s.name);
  m["scenarios"] = names;
  m["notes"] = notes;
  fs::create_directories(dir);
  write_text(dir / "manifest.json", m.dump(2) + "\n");
}

std::string opt_field(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

std::string stat_fields(const Stat& s) {
  if (s.count == 0) return ",";
  return fmt::format("{},{}", s.mean, s.stddev);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentPlan& plan, const fs::path& output_dir) {
  plan.validate();
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < plan.scenarios.size(); ++s) {
    for (std::size_t st = 0; st < plan.strategies.size(); ++st) {
      for (int r = 0; r < plan.replicates; ++r) jobs.push_back({s, st, r});
    }
  }

  std::vector<std::optional<SimulationResult>> runs(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::atomic<std::size_t> completed{0};
  std::mutex err_mu;
  std::string error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      const Job& job = jobs[i];
      ScenarioConfig sc = plan.scenarios[job.scenario];
      sc.seed = plan.base_seed + static_cast<std::uint64_t>(job.replicate);
      try {
        runs[i] = run_simulation(sc, plan.strategies[job.strategy], plan.params, plan.radio,
                                 plan.checkpoints);
        completed.fetch_add(1);
      } catch (const std::exception& e) {
        std::lock_guard lock(err_mu);
        if (!failed.exchange(true)) {
          error = fmt::format("{} / {} / replicate {}: {}", sc.name, plan.strategies[job.strategy],
                              job.replicate, e.what());
        }
      }
    }
  };

  unsigned threads = plan.threads > 0 ? static_cast<unsigned>(plan.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (failed) {
    if (!output_dir.empty()) write_manifest(output_dir, plan, completed.load(), jobs.size(), error);
    throw std::runtime_error("experiment aborted: " + error);
  }

  ExperimentResult result;
  result.checkpoints = plan.checkpoints;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& run = *runs[i];
    ReplicateRecord rec;
    rec.scenario = run.scenario;
    rec.strategy = run.strategy;
    rec.replicate = jobs[i].replicate;
    rec.seed = run.seed;
    rec.fnd = run.summary.fnd;
    rec.lnd = run.summary.lnd;
    rec.fnd_censored = run.summary.fnd_censored;
    rec.lnd_censored = run.summary.lnd_censored;
    rec.energy_at = run.consumed_at(plan.checkpoints.energy_round);
    if (auto t = run.throughput_at(plan.checkpoints.throughput_round)) rec.throughput_at = *t;
    result.replicates.push_back(std::move(rec));
  }

  // Cells and series, in (scenario, strategy) order.
  const auto reps = static_cast<std::size_t>(plan.replicates);
  for (std::size_t s = 0; s < plan.scenarios.size(); ++s) {
    ScenarioSeries series;
    series.scenario = plan.scenarios[s].name;
    series.node_count = plan.scenarios[s].node_count;
    for (std::size_t st = 0; st < plan.strategies.size(); ++st) {
      const std::size_t base = (s * plan.strategies.size() + st) * reps;
      CellSummary cell;
      cell.scenario = plan.scenarios[s].name;
      cell.strategy = plan.strategies[st];
      cell.label = label_of(cell.strategy);
      cell.replicates = plan.replicates;
      std::vector<double> fnd, lnd, energy, thr;
      std::size_t length = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& rec = result.replicates[base + r];
        fnd.push_back(rec.fnd);
        lnd.push_back(rec.lnd);
        if (rec.energy_at) energy.push_back(*rec.energy_at);
        if (rec.throughput_at) thr.push_back(static_cast<double>(*rec.throughput_at));
        length = std::max(length, runs[base + r]->rounds.size());
      }
      cell.fnd = summarize(fnd);
      cell.lnd = summarize(lnd);
      cell.energy_at = summarize(energy);
      cell.throughput_at = summarize(thr);
      result.cells.push_back(cell);

      // Runs that ended early are dead: residual 0, all nodes dead, no traffic.
      std::vector<double> res(length, 0.0), dead(length, 0.0), bits(length, 0.0);
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& run = *runs[base + r];
        for (std::size_t k = 0; k < length; ++k) {
          if (k < run.rounds.size()) {
            res[k] += run.rounds[k].total_residual;
            dead[k] += run.node_count - run.rounds[k].alive;
            bits[k] += static_cast<double>(run.rounds[k].bits_to_bs);
          } else if (!run.rounds.empty()) {
            const auto& last = run.rounds.back();
            res[k] += last.total_residual;
            dead[k] += run.node_count - last.alive;
          }
        }
      }
      for (std::size_t k = 0; k < length; ++k) {
        res[k] /= static_cast<double>(reps);
        dead[k] /= static_cast<double>(reps);
        bits[k] /= static_cast<double>(reps);
      }
      series.strategies.push_back(cell.label);
      series.residual.push_back(std::move(res));
      series.dead.push_back(std::move(dead));
      series.throughput.push_back(std::move(bits));
    }
    result.series.push_back(std::move(series));
  }

  if (plan.keep_runs) {
    result.runs.reserve(runs.size());
    for (auto& r : runs) result.runs.push_back(std::move(*r));
  }
  return result;
}

std::string summary_csv(const ExperimentResult& result) {
  const auto& cp = result.checkpoints;
  std::string out = fmt::format(
      "scenario,strategy,label,replicates,fnd_mean,fnd_std,lnd_mean,lnd_std,"
      "energy_at_{0}_mean,energy_at_{0}_std,throughput_at_{1}_mean,throughput_at_{1}_std\n",
      cp.energy_round, cp.throughput_round);
  for (const auto& c : result.cells) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", c.scenario, c.strategy, c.label, c.replicates,
                       stat_fields(c.fnd), stat_fields(c.lnd), stat_fields(c.energy_at),
                       stat_fields(c.throughput_at));
  }
  return out;
}

std::string replicates_csv(const ExperimentResult& result) {
  const auto& cp = result.checkpoints;
  std::string out = fmt::format(
      "scenario,strategy,replicate,seed,fnd,lnd,fnd_censored,lnd_censored,energy_at_{},"
      "throughput_at_{}\n",
      cp.energy_round, cp.throughput_round);
  for (const auto& r : result.replicates) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.scenario, r.strategy, r.replicate,
                       r.seed, r.fnd, r.lnd, r.fnd_censored ? 1 : 0, r.lnd_censored ? 1 : 0,
                       opt_field(r.energy_at),
                       r.throughput_at ? fmt::format("{}", *r.throughput_at) : std::string());
  }
  return out;
}

void write_experiment_outputs(const ExperimentResult& result, const ExperimentPlan& plan,
                              const fs::path& dir, bool dump_layouts,
                              const std::vector<std::string>& notes) {
  fs::create_directories(dir);
  write_text(dir / "summary.csv", summary_csv(result));
  write_text(dir / "replicates.csv", replicates_csv(result));
  if (dump_layouts) {
    if (result.runs.empty()) {
      throw std::logic_error("write_experiment_outputs: layouts need keep_runs");
    }
    fs::create_directories(dir / "layouts");
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
      const auto& run = result.runs[i];
      const auto& rec = result.replicates[i];
      write_layout(dir / "layouts" /
                       fmt::format("{}__{}__rep{:02}.csv", rec.scenario, rec.strategy, rec.replicate),
                   run.layout);
    }
  }
  write_manifest(dir, plan, result.replicates.size(), result.replicates.size(), {}, notes);
}

}  // namespace woac
