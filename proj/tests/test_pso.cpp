#include <doctest.h>

#include "test_support.hpp"
#include "woac/errors.hpp"
#include "woac/pso.hpp"

using namespace woac;
using namespace woac::pso;

namespace {

double neg_sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return -s;
}

}  // namespace

TEST_SUITE("pso") {

TEST_CASE("sphere converges with a monotone trace") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Params p;
    p.bounds.assign(4, {-10.0, 10.0});
    Rng rng(seed);
    const auto r = optimize(neg_sphere, Sense::kMaximize, p, rng);
    CHECK(r.best_fitness >= -1e-2);
    REQUIRE(r.trace.size() == p.iterations);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] >= r.trace[i - 1]);
  }
}

TEST_CASE("zero iterations return the best initial particle") {
  Params p;
  p.bounds.assign(3, {-1.0, 1.0});
  p.iterations = 0;
  p.particles = 8;
  std::vector<double> seen;
  Rng rng(3);
  const auto r = optimize(
      [&](std::span<const double> x) {
        const double f = neg_sphere(x);
        seen.push_back(f);
        return f;
      },
      Sense::kMaximize, p, rng);
  REQUIRE(seen.size() == 8);
  CHECK(r.best_fitness == *std::max_element(seen.begin(), seen.end()));
  CHECK(r.trace.empty());
}

TEST_CASE("positions stay inside the bounds") {
  Params p;
  p.bounds = {{0.0, 1.0}, {50.0, 60.0}};
  p.iterations = 50;
  Rng rng(4);
  optimize(
      [&](std::span<const double> x) {
        CHECK(x[0] >= 0.0);
        CHECK(x[0] <= 1.0);
        CHECK(x[1] >= 50.0);
        CHECK(x[1] <= 60.0);
        return x[0] + x[1];
      },
      Sense::kMaximize, p, rng);
}

TEST_CASE("identical seeds give identical results") {
  Params p;
  p.bounds.assign(2, {-5.0, 5.0});
  p.iterations = 100;
  Rng a(8), b(8);
  const auto ra = optimize(neg_sphere, Sense::kMinimize, p, a);
  const auto rb = optimize(neg_sphere, Sense::kMinimize, p, b);
  CHECK(ra.best_position == rb.best_position);
  CHECK(ra.trace == rb.trace);
}

TEST_CASE("unusable parameters are configuration errors") {
  Params p;
  Rng rng(1);
  CHECK_THROWS_AS(optimize(neg_sphere, Sense::kMaximize, p, rng), ConfigError);
  p.bounds.assign(2, {0.0, 1.0});
  p.particles = 0;
  CHECK_THROWS_AS(optimize(neg_sphere, Sense::kMaximize, p, rng), ConfigError);
}

}
