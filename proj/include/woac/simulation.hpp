#pragma once

// Round loop: setup phase, cluster-head selection, steady-state energy
// bookkeeping, death handling and per-round metrics.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "woac/energy.hpp"
#include "woac/network.hpp"
#include "woac/protocols.hpp"

namespace woac {

struct RoundMetrics {
  int round = 0;  // 1-based
  int alive = 0;
  double total_residual = 0.0;       // J, after the round
  double consumed_cumulative = 0.0;  // J, since deployment
  std::int64_t bits_to_bs = 0;
  std::vector<int> ch_ids;
  bool eligibility_fallback = false;
};

enum class Phase { kSetupReport, kSetupAnnounce, kMemberTx, kHeadRx, kAggregate, kHeadTx, kDirectTx };

const char* to_string(Phase phase);

/// A node that ran out of energy part-way through its action sequence, or a
/// round whose selection had to widen the eligible pool.
struct SimEvent {
  enum class Kind { kDeath, kEligibilityFallback };
  int round = 0;
  Kind kind = Kind::kDeath;
  int node = -1;
  Phase phase = Phase::kSetupReport;
};

struct RoundEnv {
  int round = 1;
  int k = 1;
  Point bs_position;
  RadioParams radio;
  Field field;
};

/// Running totals shared across rounds of one simulation.
struct EnergyLedger {
  double consumed = 0.0;
  std::vector<SimEvent> events;
};

/// Executes one round on `nodes` in place. Throws SimulationTerminated when no
/// node is alive at the start of the round.
RoundMetrics run_round(std::vector<NodeState>& nodes, ClusterStrategy& strategy,
                       const RoundEnv& env, Rng& rng, EnergyLedger& ledger);

struct Checkpoints {
  int throughput_round = 2000;
  int energy_round = 5000;
};

struct LifetimeSummary {
  int fnd = 0;
  int lnd = 0;
  bool fnd_censored = false;  // no death within max_rounds; fnd holds max_rounds
  bool lnd_censored = false;  // nodes still alive at max_rounds; lnd holds max_rounds
  std::map<int, std::int64_t> throughput_at;  // only rounds that are defined
  std::map<int, double> consumed_at;
};

struct SimulationResult {
  std::string scenario;
  std::string strategy;
  std::uint64_t seed = 0;
  int node_count = 0;
  double initial_energy = 0.0;
  std::vector<NodeState> layout;  // as deployed
  std::vector<RoundMetrics> rounds;
  std::vector<SimEvent> events;
  LifetimeSummary summary;

  /// bits_to_bs at `round`: 0 once the network is dead, empty if the run was
  /// cut off before reaching it.
  std::optional<std::int64_t> throughput_at(int round) const;
  std::optional<double> consumed_at(int round) const;
  bool network_dead() const;
};

/// Deploys from config.seed unless `layout` is given, then loops rounds until
/// every node is dead or max_rounds is reached.
SimulationResult run_simulation(const ScenarioConfig& config, std::string_view strategy,
                                const StrategyParams& params, const RadioParams& radio,
                                const Checkpoints& checkpoints = {},
                                const std::vector<NodeState>* layout = nullptr);

/// The deployment run_simulation would use for this config.
std::vector<NodeState> deploy_for_seed(const ScenarioConfig& config);
std::uint64_t protocol_seed(std::uint64_t seed);

// Output formats.
std::string rounds_to_csv(const std::vector<RoundMetrics>& rounds);
std::string events_to_csv(const std::vector<SimEvent>& events);
std::string summary_to_json(const SimulationResult& result, const Checkpoints& checkpoints);

}  // namespace woac
