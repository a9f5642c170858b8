#include "woac/simulation.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "woac/errors.hpp"

namespace woac {

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kSetupReport: return "setup_report";
    case Phase::kSetupAnnounce: return "setup_announce";
    case Phase::kMemberTx: return "member_tx";
    case Phase::kHeadRx: return "head_rx";
    case Phase::kAggregate: return "aggregate";
    case Phase::kHeadTx: return "head_tx";
    case Phase::kDirectTx: return "direct_tx";
  }
  return "unknown";
}

namespace {

// Charges `cost` if affordable. Otherwise the node drains to zero and dies;
// the action does not complete.
bool spend(NodeState& n, double cost, Phase phase, int round, EnergyLedger& ledger) {
  if (!n.alive) return false;
  if (n.residual_energy >= cost) {
    n.residual_energy -= cost;
    ledger.consumed += cost;
    if (n.residual_energy <= 0.0) {
      n.residual_energy = 0.0;
      n.alive = false;
      ledger.events.push_back({round, SimEvent::Kind::kDeath, n.id, phase});
    }
    return true;
  }
  ledger.consumed += n.residual_energy;
  n.residual_energy = 0.0;
  n.alive = false;
  ledger.events.push_back({round, SimEvent::Kind::kDeath, n.id, phase});
  return false;
}

}  // namespace

RoundMetrics run_round(std::vector<NodeState>& nodes, ClusterStrategy& strategy,
                       const RoundEnv& env, Rng& rng, EnergyLedger& ledger) {
  const auto any_alive = [&] {
    for (const auto& n : nodes) {
      if (n.alive) return true;
    }
    return false;
  };
  if (!any_alive()) throw SimulationTerminated("round refused: no alive nodes");
  const RadioParams& radio = env.radio;

  // (1) Setup: status report to the BS, then the CH announcement.
  for (auto& n : nodes) {
    if (!n.alive) continue;
    if (spend(n, tx_energy(radio.msg_bits, distance(n.position, env.bs_position), radio),
              Phase::kSetupReport, env.round, ledger)) {
      spend(n, rx_energy(radio.msg_bits, radio), Phase::kSetupAnnounce, env.round, ledger);
    }
  }

  RoundMetrics m;
  m.round = env.round;
  std::int64_t delivered = 0;

  if (any_alive()) {
    // (2) Selection on post-setup energies.
    const SelectionContext ctx{nodes, env.round - 1, env.k, env.bs_position, radio, env.field, rng};
    ChAssignment assignment = strategy.select(ctx);
    if (assignment.eligibility_fallback) {
      m.eligibility_fallback = true;
      ledger.events.push_back({env.round, SimEvent::Kind::kEligibilityFallback, -1, Phase::kSetupReport});
    }
    for (auto& n : nodes) n.role = Role::kMember;
    for (int id : assignment.ch_ids) nodes[static_cast<std::size_t>(id)].role = Role::kClusterHead;
    m.ch_ids = assignment.ch_ids;

    // (3) Steady state.
    std::vector<std::int64_t> received(nodes.size(), 0);
    for (auto& n : nodes) {
      if (!n.alive) continue;
      const int target = assignment.member_of[static_cast<std::size_t>(n.id)];
      if (target == ChAssignment::kBaseStation) {
        if (spend(n, tx_energy(radio.packet_bits, distance(n.position, env.bs_position), radio),
                  Phase::kDirectTx, env.round, ledger)) {
          ++delivered;
        }
      } else if (target >= 0) {
        auto& ch = nodes[static_cast<std::size_t>(target)];
        if (spend(n, tx_energy(radio.packet_bits, distance(n.position, ch.position), radio),
                  Phase::kMemberTx, env.round, ledger) &&
            ch.alive && spend(ch, rx_energy(radio.packet_bits, radio), Phase::kHeadRx, env.round, ledger)) {
          ++received[static_cast<std::size_t>(target)];
        }
      }
    }
    for (int id : assignment.ch_ids) {
      auto& ch = nodes[static_cast<std::size_t>(id)];
      const std::int64_t signals = received[static_cast<std::size_t>(id)] + 1;
      if (spend(ch, aggregation_energy(radio.packet_bits * signals, radio), Phase::kAggregate,
                env.round, ledger) &&
          spend(ch, tx_energy(radio.packet_bits, distance(ch.position, env.bs_position), radio),
                Phase::kHeadTx, env.round, ledger)) {
        delivered += signals;
      }
    }
  }

  // (5) Metrics.
  for (const auto& n : nodes) {
    if (n.alive) {
      ++m.alive;
      m.total_residual += n.residual_energy;
    }
  }
  m.consumed_cumulative = ledger.consumed;
  m.bits_to_bs = delivered * radio.packet_bits;
  return m;
}

std::uint64_t protocol_seed(std::uint64_t seed) { return mix_seed(seed, 2); }

std::vector<NodeState> deploy_for_seed(const ScenarioConfig& config) {
  Rng rng(mix_seed(config.seed, 1));
  return deploy_nodes(config, rng);
}

SimulationResult run_simulation(const ScenarioConfig& config, std::string_view strategy_name,
                                const StrategyParams& params, const RadioParams& radio,
                                const Checkpoints& checkpoints,
                                const std::vector<NodeState>* layout) {
  config.validate();
  radio.validate();
  auto strategy = make_strategy(strategy_name, params, config.node_count, config.ch_count);

  SimulationResult result;
  result.scenario = config.name;
  result.strategy = std::string(strategy->name());
  result.seed = config.seed;
  result.initial_energy = config.initial_energy;
  std::vector<NodeState> nodes = layout ? *layout : deploy_for_seed(config);
  for (auto& n : nodes) {
    n.residual_energy = config.initial_energy;
    n.alive = true;
    n.role = Role::kMember;
  }
  result.node_count = static_cast<int>(nodes.size());
  result.layout = nodes;

  Rng rng(protocol_seed(config.seed));
  EnergyLedger ledger;
  RoundEnv env{1, config.ch_count, config.bs_position, radio, config.area};
  LifetimeSummary& s = result.summary;
  bool saw_death = false;

  for (int r = 1; r <= config.max_rounds && !nodes.empty(); ++r) {
    bool any = false;
    for (const auto& n : nodes) any = any || n.alive;
    if (!any) break;
    env.round = r;
    result.rounds.push_back(run_round(nodes, *strategy, env, rng, ledger));
    const auto& m = result.rounds.back();
    if (!saw_death && m.alive < result.node_count) {
      saw_death = true;
      s.fnd = r;
    }
    if (m.alive == 0) {
      s.lnd = r;
      break;
    }
  }
  result.events = std::move(ledger.events);

  if (!saw_death) {
    s.fnd = config.max_rounds;
    s.fnd_censored = true;
  }
  if (!result.network_dead()) {
    s.lnd = config.max_rounds;
    s.lnd_censored = true;
  }
  for (int c : {checkpoints.throughput_round}) {
    if (auto v = result.throughput_at(c)) s.throughput_at[c] = *v;
  }
  for (int c : {checkpoints.energy_round}) {
    if (auto v = result.consumed_at(c)) s.consumed_at[c] = *v;
  }
  return result;
}

bool SimulationResult::network_dead() const {
  return node_count == 0 || (!rounds.empty() && rounds.back().alive == 0);
}

std::optional<std::int64_t> SimulationResult::throughput_at(int round) const {
  if (round >= 1 && round <= static_cast<int>(rounds.size())) {
    return rounds[static_cast<std::size_t>(round - 1)].bits_to_bs;
  }
  if (round > static_cast<int>(rounds.size()) && network_dead()) return 0;
  return std::nullopt;
}

std::optional<double> SimulationResult::consumed_at(int round) const {
  if (round >= 1 && round <= static_cast<int>(rounds.size())) {
    return rounds[static_cast<std::size_t>(round - 1)].consumed_cumulative;
  }
  if (round > static_cast<int>(rounds.size()) && network_dead()) {
    return rounds.empty() ? 0.0 : rounds.back().consumed_cumulative;
  }
  return std::nullopt;
}

std::string rounds_to_csv(const std::vector<RoundMetrics>& rounds) {
  std::string out = "round,alive,total_residual_J,consumed_J,bits_to_bs,num_chs\n";
  for (const auto& m : rounds) {
    out += fmt::format("{},{},{},{},{},{}\n", m.round, m.alive, m.total_residual,
                       m.consumed_cumulative, m.bits_to_bs, m.ch_ids.size());
  }
  return out;
}

std::string events_to_csv(const std::vector<SimEvent>& events) {
  std::string out = "round,event,node,phase\n";
  for (const auto& e : events) {
    if (e.kind == SimEvent::Kind::kDeath) {
      out += fmt::format("{},death,{},{}\n", e.round, e.node, to_string(e.phase));
    } else {
      out += fmt::format("{},eligibility_fallback,,\n", e.round);
    }
  }
  return out;
}

std::string summary_to_json(const SimulationResult& result, const Checkpoints& checkpoints) {
  nlohmann::ordered_json j;
  j["scenario"] = result.scenario;
  j["strategy"] = result.strategy;
  j["seed"] = result.seed;
  j["fnd"] = result.summary.fnd;
  j["lnd"] = result.summary.lnd;
  j["fnd_censored"] = result.summary.fnd_censored;
  j["lnd_censored"] = result.summary.lnd_censored;
  j["rounds_simulated"] = result.rounds.size();
  const auto t = result.throughput_at(checkpoints.throughput_round);
  const auto e = result.consumed_at(checkpoints.energy_round);
  j[fmt::format("throughput_at_{}", checkpoints.throughput_round)] =
      t ? nlohmann::ordered_json(*t) : nlohmann::ordered_json(nullptr);
  j[fmt::format("energy_at_{}", checkpoints.energy_round)] =
      e ? nlohmann::ordered_json(*e) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace woac
