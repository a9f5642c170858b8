#include "woac/network.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "woac/errors.hpp"

namespace woac {

void ScenarioConfig::validate() const {
  if (!(area.width > 0.0) || !(area.height > 0.0)) {
    throw ConfigError("scenario '" + name + "': area must be positive");
  }
  if (node_count < 0) throw ConfigError("scenario '" + name + "': node_count must be >= 0");
  if (ch_count <= 0 || ch_count > std::max(node_count, 1)) {
    throw ConfigError("scenario '" + name + "': ch_count must satisfy 0 < K <= node_count");
  }
  if (!(initial_energy > 0.0)) {
    throw ConfigError("scenario '" + name + "': initial_energy must be positive");
  }
  if (max_rounds < 0) throw ConfigError("scenario '" + name + "': max_rounds must be >= 0");
}

std::vector<NodeState> deploy_nodes(const ScenarioConfig& config, Rng& rng) {
  std::vector<NodeState> nodes;
  nodes.reserve(static_cast<std::size_t>(config.node_count));
  for (int i = 0; i < config.node_count; ++i) {
    NodeState n;
    n.id = i;
    n.position.x = uniform(rng, 0.0, config.area.width);
    n.position.y = uniform(rng, 0.0, config.area.height);
    n.residual_energy = config.initial_energy;
    nodes.push_back(n);
  }
  return nodes;
}

std::string layout_to_csv(std::span<const NodeState> nodes) {
  std::string out = "id,x,y\n";
  for (const auto& n : nodes) {
    out += fmt::format("{},{},{}\n", n.id, n.position.x, n.position.y);
  }
  return out;
}

namespace {

double parse_double(std::string_view s, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(fmt::format("bad number '{}'", s), fmt::format("layout line {}", line));
  }
  return v;
}

}  // namespace

std::vector<NodeState> layout_from_csv(std::string_view text, double initial_energy) {
  std::vector<NodeState> nodes;
  std::istringstream in{std::string(text)};
  std::string row;
  int line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    if (line == 1) {
      if (row != "id,x,y") throw ConfigError("expected header 'id,x,y'", "layout line 1");
      continue;
    }
    const auto c1 = row.find(',');
    const auto c2 = row.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw ConfigError("expected 3 columns", fmt::format("layout line {}", line));
    }
    const std::string_view sv(row);
    NodeState n;
    n.id = static_cast<int>(parse_double(sv.substr(0, c1), line));
    n.position.x = parse_double(sv.substr(c1 + 1, c2 - c1 - 1), line);
    n.position.y = parse_double(sv.substr(c2 + 1), line);
    n.residual_energy = initial_energy;
    if (n.id != static_cast<int>(nodes.size())) {
      throw ConfigError("node ids must be dense and 0-based", fmt::format("layout line {}", line));
    }
    nodes.push_back(n);
  }
  return nodes;
}

void write_layout(const std::filesystem::path& path, std::span<const NodeState> nodes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << layout_to_csv(nodes);
}

std::vector<NodeState> read_layout(const std::filesystem::path& path, double initial_energy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open layout", path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return layout_from_csv(ss.str(), initial_energy);
}

}  // namespace woac
