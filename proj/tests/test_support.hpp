#pragma once
// Shared fixtures for the unit tests.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "woac/network.hpp"
#include "woac/rng.hpp"

namespace woac::testing {

inline bool rel_close(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::max(std::abs(want), 1e-300);
}

inline std::vector<NodeState> make_nodes(const std::vector<Point>& pts, double energy = 0.5) {
  std::vector<NodeState> nodes;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    nodes.push_back({static_cast<int>(i), pts[i], energy, true, Role::kMember});
  }
  return nodes;
}

inline std::vector<NodeState> random_nodes(Rng& rng, int n, double w = 100.0, double h = 100.0,
                                           double energy = 0.5) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({uniform(rng, 0.0, w), uniform(rng, 0.0, h)});
  return make_nodes(pts, energy);
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("woac_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace woac::testing

