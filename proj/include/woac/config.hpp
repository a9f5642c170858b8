#pragma once

// Configuration document shared by `run`, `experiment` and `validate`.
//
// Schema (JSON; every key optional, unknown keys rejected):
//
//   {
//     "scenarios": [ { "name": "wsn1-center", "area_m": [100, 100], "node_count": 100,
//                      "ch_count": 10, "bs_position_m": [50, 50],
//                      "initial_energy_J": 0.5, "max_rounds": 10000 } ],
//     "strategy": "woa",                         // used by `run`
//     "strategies": ["dt", "leach", "leach-c", "pso", "woa"],  // used by `experiment`
//     "seed": 1,                                 // run seed / experiment base seed
//     "replicates": 20,
//     "radio": { "e_elec_J_per_bit": 5e-8, "eps_fs_J_per_bit_m2": 1e-11,
//                "eps_mp_J_per_bit_m4": 1.3e-15, "e_da_J_per_bit": 5e-9, "d0_m": 30,
//                "packet_bits": 4000, "msg_bits": 200 },
//     "fitness": { "p1": 0.7, "p2": 0.3, "neighbor_radius_m": null },   // null -> d0
//     "woa": { "agents": 30, "iterations": 500, "spiral_b": 1, "coefficient_mode": "vector" },
//     "pso": { "particles": 30, "iterations": 500, "inertia": 0.72, "cognitive": 1.49,
//              "social": 1.49, "velocity_clamp": 0.2 },
//     "leach": { "p_desired": null },            // null -> K / node_count
//     "leach_c": { "max_sweeps": 200 },
//     "checkpoints": { "throughput_round": 2000, "energy_round": 5000 },
//     "output_dir": "out",
//     "threads": 0,                              // 0 -> hardware concurrency
//     "dump_layouts": true
//   }

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "woac/energy.hpp"
#include "woac/network.hpp"
#include "woac/protocols.hpp"
#include "woac/simulation.hpp"

namespace woac {

struct Config {
  std::vector<ScenarioConfig> scenarios;
  std::string strategy = "woa";
  std::vector<std::string> strategies;
  std::uint64_t seed = 1;
  int replicates = 20;
  RadioParams radio;
  StrategyParams params;
  Checkpoints checkpoints;
  std::filesystem::path output_dir = "out";
  int threads = 0;
  bool dump_layouts = true;
};

/// The document with every default filled in.
nlohmann::ordered_json default_config_document();

/// Parses and validates. `source` names the origin in error messages.
/// Unknown keys, wrong types and out-of-range values raise ConfigError with
/// the line of the offending key when it can be located in `text`.
nlohmann::ordered_json parse_config_document(const std::string& text, const std::string& source);

/// Applies `key=value` overrides by dotted path (`radio.d0_m=40`,
/// `scenarios.0.node_count=300`). The path must already exist in the resolved
/// document; the value is parsed as JSON, falling back to a plain string.
void apply_override(nlohmann::ordered_json& doc, const std::string& assignment);

Config config_from_document(const nlohmann::ordered_json& doc);
nlohmann::ordered_json config_to_document(const Config& config);

/// Reads, merges over defaults, applies overrides and converts.
Config load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides,
                   nlohmann::ordered_json* resolved = nullptr);

/// Human-readable parameter listing with engineering units.
std::string describe_config(const Config& config);

}  // namespace woac
