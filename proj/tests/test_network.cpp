#include <doctest.h>

#include "test_support.hpp"
#include "woac/errors.hpp"
#include "woac/nearest_index.hpp"
#include "woac/network.hpp"

using namespace woac;
using woac::testing::random_nodes;

TEST_SUITE("network") {

TEST_CASE("deployment") {
  ScenarioConfig cfg;
  Rng rng(1);
  const auto nodes = deploy_nodes(cfg, rng);
  REQUIRE(nodes.size() == 100);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(nodes[i].id == static_cast<int>(i));
    CHECK(nodes[i].position.x >= 0.0);
    CHECK(nodes[i].position.x <= 100.0);
    CHECK(nodes[i].position.y >= 0.0);
    CHECK(nodes[i].position.y <= 100.0);
    CHECK(nodes[i].residual_energy == 0.5);
    CHECK(nodes[i].alive);
    CHECK(nodes[i].role == Role::kMember);
  }
  Rng again(1);
  const auto twin = deploy_nodes(cfg, again);
  for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(twin[i].position == nodes[i].position);

  cfg.node_count = 0;
  Rng empty(1);
  CHECK(deploy_nodes(cfg, empty).empty());
}

TEST_CASE("distances") {
  CHECK(distance({0, 0}, {0, 0}) == 0.0);
  CHECK(distance({0, 0}, {3, 4}) == 5.0);
  CHECK(distance({50, 50}, {50, 200}) == 150.0);
}

TEST_CASE("distance is a metric on random triples") {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const Point a{uniform(rng, -100, 300), uniform(rng, -100, 300)};
    const Point b{uniform(rng, -100, 300), uniform(rng, -100, 300)};
    const Point c{uniform(rng, -100, 300), uniform(rng, -100, 300)};
    CHECK(distance(a, b) == distance(b, a));
    CHECK(distance(a, b) >= 0.0);
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
  }
}

TEST_CASE("scenario validation") {
  ScenarioConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.ch_count = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.ch_count = 101;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.initial_energy = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.area.width = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("layout csv round-trips exactly") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto nodes = random_nodes(rng, 1 + static_cast<int>(uniform_index(rng, 200)));
    const auto text = layout_to_csv(nodes);
    const auto back = layout_from_csv(text, 0.25);
    REQUIRE(back.size() == nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      CHECK(back[i].id == nodes[i].id);
      CHECK(back[i].position == nodes[i].position);
      CHECK(back[i].residual_energy == 0.25);
    }
    CHECK(layout_to_csv(back) == text);
  }
}

TEST_CASE("malformed layouts are rejected with a line number") {
  CHECK_THROWS_AS(layout_from_csv("x,y\n", 0.5), ConfigError);
  try {
    layout_from_csv("id,x,y\n0,1,2\n2,3,4\n", 0.5);
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.where()) == "layout line 3");
  }
  CHECK_THROWS_AS(layout_from_csv("id,x,y\n0,abc,2\n", 0.5), ConfigError);
}

TEST_CASE("nearest index agrees with a linear scan") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 150));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({uniform(rng, 0, 100), uniform(rng, 0, 100)});
    if (trial % 5 == 0) pts.push_back(pts.front());  // exact duplicate
    const NearestIndex index(pts, {0, 0}, {100, 100});
    for (int q = 0; q < 500; ++q) {
      const Point p{uniform(rng, -20, 120), uniform(rng, -20, 120)};
      int best = 0;
      for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
        if (squared_distance(p, pts[static_cast<std::size_t>(i)]) <
            squared_distance(p, pts[static_cast<std::size_t>(best)])) {
          best = i;
        }
      }
      CHECK(index.nearest(p) == best);
    }
  }
}

TEST_CASE("nearest index ties go to the lowest index") {
  const std::vector<Point> pts{{10, 50}, {90, 50}, {50, 10}};
  const NearestIndex index(pts, {0, 0}, {100, 100});
  CHECK(index.nearest({50, 50}) == 0);
  CHECK(index.nearest({50, 90}) == 0);
  CHECK(index.nearest({95, 50}) == 1);
}

}
