#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "woac/rng.hpp"

namespace woac {

/// Planar position in meters; origin at the field's lower-left corner.
/// The base station may lie outside the field.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) { return std::sqrt(squared_distance(a, b)); }

enum class Role { kMember, kClusterHead };

struct NodeState {
  int id = 0;  // dense, 0-based; equals the node's index in its layout
  Point position;
  double residual_energy = 0.0;  // joules, never negative
  bool alive = true;
  Role role = Role::kMember;
};

struct Field {
  double width = 100.0;
  double height = 100.0;
};

struct ScenarioConfig {
  std::string name = "wsn1-center";
  Field area;
  int node_count = 100;
  int ch_count = 10;
  Point bs_position{50.0, 50.0};
  double initial_energy = 0.5;
  int max_rounds = 10000;
  std::uint64_t seed = 1;

  /// Throws ConfigError on an invalid scenario.
  void validate() const;
};

/// Uniform i.i.d. placement over the field, full batteries, all members.
std::vector<NodeState> deploy_nodes(const ScenarioConfig& config, Rng& rng);

// Layout CSV: header `id,x,y`, one row per node, shortest round-trip decimals.
std::string layout_to_csv(std::span<const NodeState> nodes);
std::vector<NodeState> layout_from_csv(std::string_view text, double initial_energy);
void write_layout(const std::filesystem::path& path, std::span<const NodeState> nodes);
std::vector<NodeState> read_layout(const std::filesystem::path& path, double initial_energy);

}  // namespace woac
