#pragma once

// Global-best particle swarm optimizer over a bounded box. Used as the
// comparison baseline for the whale optimizer, sharing its objective type.

#include <cstddef>
#include <vector>

#include "woac/woa.hpp"

namespace woac::pso {

using woa::Interval;
using woa::Objective;
using woa::Sense;

struct Params {
  std::size_t particles = 30;
  std::size_t iterations = 500;  // zero is allowed: returns the best initial particle
  double inertia = 0.72;
  double cognitive = 1.49;
  double social = 1.49;
  /// Velocity is clamped per dimension to this fraction of the bound width.
  double velocity_clamp = 0.2;
  std::vector<Interval> bounds;

  void validate() const;
};

struct Result {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<double> trace;
};

Result optimize(const Objective& objective, Sense sense, const Params& params, Rng& rng);

}  // namespace woac::pso
