#include "woac/pso.hpp"

#include <algorithm>

#include "woac/errors.hpp"

namespace woac::pso {

void Params::validate() const {
  if (particles < 1) throw ConfigError("pso: particles must be at least 1");
  if (bounds.empty()) throw ConfigError("pso: search space has no dimensions");
  for (const auto& b : bounds) {
    if (!(b.low < b.high)) throw ConfigError("pso: every bound needs low < high");
  }
  if (velocity_clamp <= 0.0) throw ConfigError("pso: velocity_clamp must be positive");
}

Result optimize(const Objective& objective, Sense sense, const Params& params, Rng& rng) {
  params.validate();
  const std::size_t dim = params.bounds.size();

  struct Particle {
    std::vector<double> x, v, best_x;
    double best_f = 0.0;
  };

  std::vector<double> vmax(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    vmax[j] = params.velocity_clamp * (params.bounds[j].high - params.bounds[j].low);
  }

  std::vector<Particle> swarm(params.particles);
  Result result;
  bool have_best = false;
  for (auto& p : swarm) {
    p.x.resize(dim);
    p.v.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      p.x[j] = uniform(rng, params.bounds[j].low, params.bounds[j].high);
      p.v[j] = uniform(rng, -vmax[j], vmax[j]);
    }
    p.best_x = p.x;
    p.best_f = objective(p.x);
    if (!have_best || woa::improves(p.best_f, result.best_fitness, sense)) {
      result.best_fitness = p.best_f;
      result.best_position = p.x;
      have_best = true;
    }
  }

  result.trace.reserve(params.iterations);
  for (std::size_t t = 0; t < params.iterations; ++t) {
    for (auto& p : swarm) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double r1 = uniform01(rng);
        const double r2 = uniform01(rng);
        double v = params.inertia * p.v[j] + params.cognitive * r1 * (p.best_x[j] - p.x[j]) +
                   params.social * r2 * (result.best_position[j] - p.x[j]);
        v = std::clamp(v, -vmax[j], vmax[j]);
        p.v[j] = v;
        p.x[j] = std::clamp(p.x[j] + v, params.bounds[j].low, params.bounds[j].high);
      }
      const double f = objective(p.x);
      if (woa::improves(f, p.best_f, sense)) {
        p.best_f = f;
        p.best_x = p.x;
      }
      if (woa::improves(f, result.best_fitness, sense)) {
        result.best_fitness = f;
        result.best_position = p.x;
      }
    }
    result.trace.push_back(result.best_fitness);
  }
  return result;
}

}  // namespace woac::pso
