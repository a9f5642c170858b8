#include "woac/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "woac/errors.hpp"

namespace woac {

using Json = nlohmann::ordered_json;

namespace {

Json scenario_document(const ScenarioConfig& s) {
  return Json{{"name", s.name},
              {"area_m", {s.area.width, s.area.height}},
              {"node_count", s.node_count},
              {"ch_count", s.ch_count},
              {"bs_position_m", {s.bs_position.x, s.bs_position.y}},
              {"initial_energy_J", s.initial_energy},
              {"max_rounds", s.max_rounds}};
}

const char* mode_name(woa::CoefficientMode m) {
  return m == woa::CoefficientMode::kScalar ? "scalar" : "vector";
}

// Best-effort line lookup for a key so semantic errors can point into the file.
std::string locate(const std::string& text, const std::string& source, const std::string& key) {
  if (!text.empty() && !key.empty()) {
    const auto pos = text.find("\"" + key + "\"");
    if (pos != std::string::npos) {
      const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
      return fmt::format("{}:{}", source, line);
    }
  }
  return source;
}

void merge(Json& base, const Json& user, const std::string& path, const Json& scenario_defaults,
           const std::string& text, const std::string& source) {
  if (!user.is_object()) {
    throw ConfigError(fmt::format("'{}' must be an object", path.empty() ? "<root>" : path),
                      locate(text, source, path.substr(path.rfind('.') + 1)));
  }
  for (const auto& [key, value] : user.items()) {
    const std::string where = path.empty() ? key : path + "." + key;
    if (!base.contains(key)) {
      throw ConfigError(fmt::format("unknown key '{}'", where), locate(text, source, key));
    }
    Json& slot = base[key];
    if (key == "scenarios" && path.empty()) {
      if (!value.is_array()) {
        throw ConfigError("'scenarios' must be an array", locate(text, source, key));
      }
      Json merged = Json::array();
      for (std::size_t i = 0; i < value.size(); ++i) {
        Json s = scenario_defaults;
        merge(s, value[i], fmt::format("scenarios.{}", i), scenario_defaults, text, source);
        merged.push_back(std::move(s));
      }
      slot = std::move(merged);
    } else if (slot.is_object()) {
      merge(slot, value, where, scenario_defaults, text, source);
    } else {
      slot = value;
    }
  }
}

template <typename T>
T field(const Json& obj, const char* key, const std::string& path) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(fmt::format("'{}.{}' has the wrong type or is missing", path, key));
  }
}

template <typename T>
T positive(T v, const std::string& what) {
  if (!(v > T{})) throw ConfigError(fmt::format("'{}' must be positive", what));
  return v;
}

std::pair<double, double> pair_field(const Json& obj, const char* key, const std::string& path) {
  auto v = field<std::vector<double>>(obj, key, path);
  if (v.size() != 2) throw ConfigError(fmt::format("'{}.{}' must hold two numbers", path, key));
  return {v[0], v[1]};
}

}  // namespace

Json default_config_document() {
  Config c;
  c.scenarios.push_back(ScenarioConfig{});
  c.strategies.assign(std::begin(kStrategyNames), std::end(kStrategyNames));
  Json doc = config_to_document(c);
  doc["fitness"]["neighbor_radius_m"] = nullptr;
  return doc;
}

Json config_to_document(const Config& c) {
  Json scenarios = Json::array();
  for (const auto& s : c.scenarios) scenarios.push_back(scenario_document(s));
  const auto& p = c.params;
  return Json{
      {"scenarios", scenarios},
      {"strategy", c.strategy},
      {"strategies", c.strategies},
      {"seed", c.seed},
      {"replicates", c.replicates},
      {"radio",
       {{"e_elec_J_per_bit", c.radio.e_elec},
        {"eps_fs_J_per_bit_m2", c.radio.eps_fs},
        {"eps_mp_J_per_bit_m4", c.radio.eps_mp},
        {"e_da_J_per_bit", c.radio.e_da},
        {"d0_m", c.radio.d0},
        {"packet_bits", c.radio.packet_bits},
        {"msg_bits", c.radio.msg_bits}}},
      {"fitness",
       {{"p1", p.fitness.p1}, {"p2", p.fitness.p2}, {"neighbor_radius_m", p.fitness.neighbor_radius}}},
      {"woa",
       {{"agents", p.woa.agents},
        {"iterations", p.woa.iterations},
        {"spiral_b", p.woa.spiral_b},
        {"coefficient_mode", mode_name(p.woa.mode)}}},
      {"pso",
       {{"particles", p.pso.particles},
        {"iterations", p.pso.iterations},
        {"inertia", p.pso.inertia},
        {"cognitive", p.pso.cognitive},
        {"social", p.pso.social},
        {"velocity_clamp", p.pso.velocity_clamp}}},
      {"leach", {{"p_desired", p.leach_p > 0.0 ? Json(p.leach_p) : Json(nullptr)}}},
      {"leach_c", {{"max_sweeps", p.leach_c.max_sweeps}}},
      {"checkpoints",
       {{"throughput_round", c.checkpoints.throughput_round},
        {"energy_round", c.checkpoints.energy_round}}},
      {"output_dir", c.output_dir.string()},
      {"threads", c.threads},
      {"dump_layouts", c.dump_layouts}};
}

Json parse_config_document(const std::string& text, const std::string& source) {
  Json user;
  try {
    user = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ConfigError("malformed JSON", fmt::format("{}:{}", source, line));
  }
  Json doc = default_config_document();
  const Json scenario_defaults = doc["scenarios"][0];
  merge(doc, user, "", scenario_defaults, text, source);
  try {
    config_from_document(doc);
  } catch (const ConfigError& e) {
    if (!e.where().empty()) throw;
    // Point at the first key named in the message, if it occurs in the file.
    std::string msg = e.what();
    std::string key;
    const auto q1 = msg.find('\'');
    const auto q2 = q1 == std::string::npos ? q1 : msg.find('\'', q1 + 1);
    if (q2 != std::string::npos) {
      key = msg.substr(q1 + 1, q2 - q1 - 1);
      key = key.substr(key.rfind('.') + 1);
    }
    throw ConfigError(msg, locate(text, source, key));
  }
  return doc;
}

void apply_override(Json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError(fmt::format("override '{}' is not key=value", assignment), "--set");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  Json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (node->is_object()) {
      if (!node->contains(part)) {
        throw ConfigError(fmt::format("unknown key '{}'", path), "--set");
      }
      node = &(*node)[part];
    } else if (node->is_array()) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw ConfigError(fmt::format("'{}': '{}' is not an array index", path, part), "--set");
      }
      if (idx >= node->size()) {
        throw ConfigError(fmt::format("'{}': index {} out of range", path, idx), "--set");
      }
      node = &(*node)[idx];
    } else {
      throw ConfigError(fmt::format("unknown key '{}'", path), "--set");
    }
  }
  if (node->is_object()) {
    throw ConfigError(fmt::format("'{}' is a section; set one of its keys", path), "--set");
  }
  Json value;
  try {
    value = Json::parse(raw);
  } catch (const nlohmann::json::parse_error&) {
    value = raw;
  }
  *node = std::move(value);
}

Config config_from_document(const Json& doc) {
  Config c;
  const auto& scenarios = doc.at("scenarios");
  if (!scenarios.is_array() || scenarios.empty()) {
    throw ConfigError("'scenarios' must be a non-empty array");
  }
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const auto& js = scenarios[i];
    const std::string path = fmt::format("scenarios.{}", i);
    ScenarioConfig s;
    s.name = field<std::string>(js, "name", path);
    std::tie(s.area.width, s.area.height) = pair_field(js, "area_m", path);
    s.node_count = field<int>(js, "node_count", path);
    s.ch_count = field<int>(js, "ch_count", path);
    std::tie(s.bs_position.x, s.bs_position.y) = pair_field(js, "bs_position_m", path);
    s.initial_energy = field<double>(js, "initial_energy_J", path);
    s.max_rounds = field<int>(js, "max_rounds", path);
    s.validate();
    c.scenarios.push_back(s);
  }
  for (std::size_t i = 0; i < c.scenarios.size(); ++i) {
    for (std::size_t j = i + 1; j < c.scenarios.size(); ++j) {
      if (c.scenarios[i].name == c.scenarios[j].name) {
        throw ConfigError(fmt::format("duplicate scenario name '{}'", c.scenarios[i].name));
      }
    }
  }

  c.strategy = field<std::string>(doc, "strategy", "");
  if (!is_strategy_name(c.strategy)) {
    throw ConfigError(fmt::format("'strategy' must be one of dt | leach | leach-c | pso | woa, got '{}'", c.strategy));
  }
  c.strategies = field<std::vector<std::string>>(doc, "strategies", "");
  if (c.strategies.empty()) throw ConfigError("'strategies' must not be empty");
  for (const auto& s : c.strategies) {
    if (!is_strategy_name(s)) throw ConfigError(fmt::format("'strategies' has unknown entry '{}'", s));
  }
  c.seed = field<std::uint64_t>(doc, "seed", "");
  c.replicates = field<int>(doc, "replicates", "");
  if (c.replicates < 1) throw ConfigError("'replicates' must be at least 1");

  const auto& r = doc.at("radio");
  c.radio.e_elec = field<double>(r, "e_elec_J_per_bit", "radio");
  c.radio.eps_fs = field<double>(r, "eps_fs_J_per_bit_m2", "radio");
  c.radio.eps_mp = field<double>(r, "eps_mp_J_per_bit_m4", "radio");
  c.radio.e_da = field<double>(r, "e_da_J_per_bit", "radio");
  c.radio.d0 = field<double>(r, "d0_m", "radio");
  c.radio.packet_bits = field<std::int64_t>(r, "packet_bits", "radio");
  c.radio.msg_bits = field<std::int64_t>(r, "msg_bits", "radio");
  c.radio.validate();

  auto& p = c.params;
  const auto& f = doc.at("fitness");
  p.fitness.p1 = field<double>(f, "p1", "fitness");
  p.fitness.p2 = field<double>(f, "p2", "fitness");
  if (p.fitness.p1 < 0 || p.fitness.p1 > 1 || p.fitness.p2 < 0 || p.fitness.p2 > 1) {
    throw ConfigError("'fitness.p1' and 'fitness.p2' must lie in [0, 1]");
  }
  p.fitness.neighbor_radius = f.at("neighbor_radius_m").is_null()
                                  ? c.radio.d0
                                  : positive(field<double>(f, "neighbor_radius_m", "fitness"),
                                             "fitness.neighbor_radius_m");

  const auto& w = doc.at("woa");
  p.woa.agents = field<std::size_t>(w, "agents", "woa");
  p.woa.iterations = field<std::size_t>(w, "iterations", "woa");
  p.woa.spiral_b = field<double>(w, "spiral_b", "woa");
  const auto mode = field<std::string>(w, "coefficient_mode", "woa");
  if (mode == "vector") {
    p.woa.mode = woa::CoefficientMode::kVector;
  } else if (mode == "scalar") {
    p.woa.mode = woa::CoefficientMode::kScalar;
  } else {
    throw ConfigError("'woa.coefficient_mode' must be 'vector' or 'scalar'");
  }
  if (p.woa.agents < 2) throw ConfigError("'woa.agents' must be at least 2");
  if (p.woa.iterations < 1) throw ConfigError("'woa.iterations' must be at least 1");

  const auto& ps = doc.at("pso");
  p.pso.particles = field<std::size_t>(ps, "particles", "pso");
  p.pso.iterations = field<std::size_t>(ps, "iterations", "pso");
  p.pso.inertia = field<double>(ps, "inertia", "pso");
  p.pso.cognitive = field<double>(ps, "cognitive", "pso");
  p.pso.social = field<double>(ps, "social", "pso");
  p.pso.velocity_clamp = positive(field<double>(ps, "velocity_clamp", "pso"), "pso.velocity_clamp");
  if (p.pso.particles < 1) throw ConfigError("'pso.particles' must be at least 1");

  const auto& l = doc.at("leach");
  if (!l.at("p_desired").is_null()) {
    p.leach_p = field<double>(l, "p_desired", "leach");
    if (!(p.leach_p > 0.0) || p.leach_p > 1.0) throw ConfigError("'leach.p_desired' must lie in (0, 1]");
  }
  p.leach_c.max_sweeps = field<int>(doc.at("leach_c"), "max_sweeps", "leach_c");
  if (p.leach_c.max_sweeps < 0) throw ConfigError("'leach_c.max_sweeps' must be >= 0");

  const auto& cp = doc.at("checkpoints");
  c.checkpoints.throughput_round = positive(field<int>(cp, "throughput_round", "checkpoints"),
                                            "checkpoints.throughput_round");
  c.checkpoints.energy_round =
      positive(field<int>(cp, "energy_round", "checkpoints"), "checkpoints.energy_round");
  c.output_dir = field<std::string>(doc, "output_dir", "");
  if (c.output_dir.empty()) throw ConfigError("'output_dir' must not be empty");
  c.threads = field<int>(doc, "threads", "");
  if (c.threads < 0) throw ConfigError("'threads' must be >= 0");
  c.dump_layouts = field<bool>(doc, "dump_layouts", "");
  return c;
}

Config load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides,
                   Json* resolved) {
  Json doc;
  if (path.empty()) {
    doc = default_config_document();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file", path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    doc = parse_config_document(ss.str(), path.string());
  }
  for (const auto& o : overrides) apply_override(doc, o);
  Config c = config_from_document(doc);
  if (resolved) *resolved = config_to_document(c);
  return c;
}

std::string describe_config(const Config& c) {
  std::string out;
  for (const auto& s : c.scenarios) {
    out += fmt::format(
        "scenario {}: {} nodes, K = {}, area {:g} x {:g} m, BS at ({:g}, {:g}) m, "
        "initial energy {:g} J, max rounds {}\n",
        s.name, s.node_count, s.ch_count, s.area.width, s.area.height, s.bs_position.x,
        s.bs_position.y, s.initial_energy, s.max_rounds);
  }
  const auto& r = c.radio;
  out += fmt::format("radio: e_elec = {:g} nJ/bit, eps_fs = {:g} pJ/bit/m^2, eps_mp = {:g} pJ/bit/m^4\n",
                     r.e_elec * 1e9, r.eps_fs * 1e12, r.eps_mp * 1e12);
  out += fmt::format("radio: e_da = {:g} nJ/bit, d0 = {:g} m, packet = {} bits, message = {} bits\n",
                     r.e_da * 1e9, r.d0, r.packet_bits, r.msg_bits);
  const auto& p = c.params;
  out += fmt::format("fitness: p1 = {:g}, p2 = {:g}, neighbor radius = {:g} m\n", p.fitness.p1,
                     p.fitness.p2, p.fitness.neighbor_radius);
  out += fmt::format("woa: {} agents, {} iterations, b = {:g}, coefficients = {}\n", p.woa.agents,
                     p.woa.iterations, p.woa.spiral_b, mode_name(p.woa.mode));
  out += fmt::format("pso: {} particles, {} iterations, w = {:g}, c1 = {:g}, c2 = {:g}\n",
                     p.pso.particles, p.pso.iterations, p.pso.inertia, p.pso.cognitive, p.pso.social);
  out += p.leach_p > 0.0 ? fmt::format("leach: p = {:g}\n", p.leach_p)
                         : std::string("leach: p = K / node_count\n");
  out += fmt::format("strategy (run): {}; strategies (experiment): {}\n", c.strategy,
                     fmt::join(c.strategies, ", "));
  out += fmt::format("seed {}, replicates {}, checkpoints: throughput @ {}, energy @ {}\n", c.seed,
                     c.replicates, c.checkpoints.throughput_round, c.checkpoints.energy_round);
  return out;
}

}  // namespace woac
