#include <doctest.h>

#include "test_support.hpp"
#include "woac/config.hpp"
#include "woac/errors.hpp"

using namespace woac;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_config_document(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("defaults reproduce the reference scenario") {
  const auto c = config_from_document(default_config_document());
  REQUIRE(c.scenarios.size() == 1);
  const auto& s = c.scenarios[0];
  CHECK(s.node_count == 100);
  CHECK(s.ch_count == 10);
  CHECK(s.area.width == 100.0);
  CHECK(s.bs_position == Point{50, 50});
  CHECK(s.initial_energy == 0.5);
  CHECK(c.radio.e_elec == 50e-9);
  CHECK(c.radio.eps_fs == 10e-12);
  CHECK(c.radio.eps_mp == 0.0013e-12);
  CHECK(c.radio.e_da == 5e-9);
  CHECK(c.radio.d0 == 30.0);
  CHECK(c.radio.packet_bits == 4000);
  CHECK(c.radio.msg_bits == 200);
  CHECK(c.params.fitness.p1 == 0.7);
  CHECK(c.params.fitness.p2 == 0.3);
  CHECK(c.params.fitness.neighbor_radius == 30.0);
  CHECK(c.params.woa.agents == 30);
  CHECK(c.params.woa.iterations == 500);
  CHECK(c.strategies.size() == 5);
  CHECK(c.replicates == 20);
}

TEST_CASE("the shipped default config matches the built-in defaults") {
  const auto shipped = load_config(std::filesystem::path(WOAC_SOURCE_DIR) / "configs/default.json", {});
  const auto builtin = load_config("", {});
  CHECK(config_to_document(shipped) == config_to_document(builtin));
}

TEST_CASE("user documents merge over the defaults") {
  const auto doc = parse_config_document(R"({"seed": 9, "radio": {"d0_m": 40}})", "x");
  const auto c = config_from_document(doc);
  CHECK(c.seed == 9);
  CHECK(c.radio.d0 == 40.0);
  CHECK(c.radio.e_elec == 50e-9);
  // The neighbor radius follows d0 unless set.
  CHECK(c.params.fitness.neighbor_radius == 40.0);
}

TEST_CASE("scenario entries take defaults for missing keys") {
  const auto c = config_from_document(parse_config_document(
      R"({"scenarios": [{"name": "a"}, {"name": "b", "node_count": 300, "ch_count": 30}]})", "x"));
  REQUIRE(c.scenarios.size() == 2);
  CHECK(c.scenarios[0].node_count == 100);
  CHECK(c.scenarios[1].node_count == 300);
  CHECK(c.scenarios[1].initial_energy == 0.5);
}

TEST_CASE("unknown keys are reported with their line") {
  CHECK(where_of("{\n  \"seed\": 1,\n  \"bogus\": 2\n}\n") == "cfg.json:3");
  CHECK(where_of("{\n  \"radio\": {\n    \"e_elec\": 1\n  }\n}\n") == "cfg.json:3");
  CHECK(where_of("{\n  \"seed\": 1,\n  oops\n}\n") == "cfg.json:3");
}

TEST_CASE("out-of-range values are rejected") {
  for (const char* text : {R"({"replicates": 0})", R"({"strategy": "aco"})", R"({"strategies": []})",
                           R"({"scenarios": [{"ch_count": 0}]})", R"({"radio": {"d0_m": -1}})",
                           R"({"woa": {"agents": 1}})", R"({"leach": {"p_desired": 1.5}})",
                           R"({"seed": "one"})", R"({"woa": {"coefficient_mode": "matrix"}})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(config_from_document(parse_config_document(text, "x")), ConfigError);
  }
}

TEST_CASE("overrides") {
  auto doc = default_config_document();
  apply_override(doc, "radio.d0_m=40");
  apply_override(doc, "scenarios.0.node_count=300");
  apply_override(doc, "strategy=leach");
  apply_override(doc, "strategies=[\"dt\",\"woa\"]");
  const auto c = config_from_document(doc);
  CHECK(c.radio.d0 == 40.0);
  CHECK(c.scenarios[0].node_count == 300);
  CHECK(c.strategy == "leach");
  CHECK(c.strategies == std::vector<std::string>{"dt", "woa"});
  CHECK_THROWS_AS(apply_override(doc, "radio.nope=1"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "scenarios.3.node_count=1"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "radio=1"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "seed"), ConfigError);
}

TEST_CASE("document round-trip") {
  auto doc = default_config_document();
  apply_override(doc, "seed=42");
  const auto c = config_from_document(doc);
  CHECK(config_to_document(config_from_document(config_to_document(c))) == config_to_document(c));
}

TEST_CASE("description uses engineering units") {
  const auto text = describe_config(load_config("", {}));
  CHECK(text.find("e_elec = 50 nJ/bit") != std::string::npos);
  CHECK(text.find("eps_fs = 10 pJ/bit/m^2") != std::string::npos);
  CHECK(text.find("d0 = 30 m") != std::string::npos);
}

TEST_CASE("a missing file is a configuration error") {
  CHECK_THROWS_AS(load_config("/nonexistent/woac.json", {}), ConfigError);
}

}
