#include "woac/woa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "woac/errors.hpp"

namespace woac::woa {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ContractViolation(std::string(op) + ": dimension mismatch");
  }
}

// Refills `out` in place so the optimize loop does not allocate per agent.
void draw_coefficients(std::size_t t, std::size_t t_max, CoefficientMode mode, Rng& rng,
                       Coefficients& out) {
  const std::size_t dim = out.A.size();
  out.a = 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
  if (mode == CoefficientMode::kScalar) {
    const double A = 2.0 * out.a * uniform01(rng) - out.a;
    const double C = 2.0 * uniform01(rng);
    std::fill(out.A.begin(), out.A.end(), A);
    std::fill(out.C.begin(), out.C.end(), C);
    out.a_magnitude = std::abs(A);
  } else {
    double sq = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      out.A[j] = 2.0 * out.a * uniform01(rng) - out.a;
      sq += out.A[j] * out.A[j];
    }
    for (std::size_t j = 0; j < dim; ++j) {
      out.C[j] = 2.0 * uniform01(rng);
    }
    out.a_magnitude = std::sqrt(sq);
  }
  out.l = uniform(rng, -1.0, 1.0);
  out.p = uniform01(rng);
}

void attract(std::span<const double> x, std::span<const double> anchor, std::span<const double> A,
             std::span<const double> C, std::span<double> out) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = std::abs(C[j] * anchor[j] - x[j]);
    out[j] = anchor[j] - A[j] * d;
  }
}

void spiral(std::span<const double> x, std::span<const double> best, double b, double l,
            std::span<double> out) {
  const double factor = std::exp(b * l) * std::cos(2.0 * std::numbers::pi * l);
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = std::abs(best[j] - x[j]) * factor + best[j];
  }
}

}  // namespace

void Params::validate() const {
  if (agents < 2) throw ConfigError("woa: agents must be at least 2");
  if (iterations < 1) throw ConfigError("woa: iterations must be at least 1");
  if (bounds.empty()) throw ConfigError("woa: search space has no dimensions");
  for (const auto& b : bounds) {
    if (!(b.low < b.high)) throw ConfigError("woa: every bound needs low < high");
  }
}

Coefficients compute_coefficients(std::size_t t, std::size_t t_max, std::size_t dimension,
                                  CoefficientMode mode, Rng& rng) {
  if (t_max == 0 || t >= t_max) {
    throw ContractViolation("compute_coefficients: requires 0 <= t < t_max");
  }
  Coefficients c;
  c.A.resize(dimension);
  c.C.resize(dimension);
  draw_coefficients(t, t_max, mode, rng, c);
  return c;
}

std::vector<double> encircle_update(std::span<const double> x, std::span<const double> best,
                                    std::span<const double> A, std::span<const double> C) {
  require_same_size(x.size(), best.size(), "encircle_update");
  require_same_size(x.size(), A.size(), "encircle_update");
  require_same_size(x.size(), C.size(), "encircle_update");
  std::vector<double> out(x.size());
  attract(x, best, A, C, out);
  return out;
}

std::vector<double> spiral_update(std::span<const double> x, std::span<const double> best,
                                  double b, double l) {
  require_same_size(x.size(), best.size(), "spiral_update");
  std::vector<double> out(x.size());
  spiral(x, best, b, l, out);
  return out;
}

std::vector<double> explore_update(std::span<const double> x, std::span<const double> other,
                                   std::span<const double> A, std::span<const double> C) {
  require_same_size(x.size(), other.size(), "explore_update");
  require_same_size(x.size(), A.size(), "explore_update");
  require_same_size(x.size(), C.size(), "explore_update");
  std::vector<double> out(x.size());
  attract(x, other, A, C, out);
  return out;
}

bool improves(double candidate, double incumbent, Sense sense) {
  return sense == Sense::kMaximize ? candidate > incumbent : candidate < incumbent;
}

Result optimize(const Objective& objective, Sense sense, const Params& params, Rng& rng) {
  params.validate();
  const std::size_t dim = params.dimension();

  std::vector<SearchAgent> agents(params.agents);
  for (auto& agent : agents) {
    agent.position.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      agent.position[j] = uniform(rng, params.bounds[j].low, params.bounds[j].high);
    }
    agent.fitness = objective(agent.position);
  }

  Result result;
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < agents.size(); ++i) {
    if (improves(agents[i].fitness, agents[best_idx].fitness, sense)) best_idx = i;
  }
  result.best_position = agents[best_idx].position;
  result.best_fitness = agents[best_idx].fitness;
  result.trace.reserve(params.iterations);

  Coefficients coeff;
  coeff.A.resize(dim);
  coeff.C.resize(dim);
  std::vector<double> next(dim);

  for (std::size_t t = 0; t < params.iterations; ++t) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
      auto& agent = agents[i];
      draw_coefficients(t, params.iterations, params.mode, rng, coeff);
      if (coeff.p < 0.5) {
        if (coeff.a_magnitude < 1.0) {
          attract(agent.position, result.best_position, coeff.A, coeff.C, next);
          ++result.branches.encircle;
        } else {
          const auto& other = agents[uniform_index(rng, agents.size())].position;
          attract(agent.position, other, coeff.A, coeff.C, next);
          ++result.branches.explore;
        }
      } else {
        spiral(agent.position, result.best_position, params.spiral_b, coeff.l, next);
        ++result.branches.spiral;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        agent.position[j] = std::clamp(next[j], params.bounds[j].low, params.bounds[j].high);
      }
      agent.fitness = objective(agent.position);
      if (improves(agent.fitness, result.best_fitness, sense)) {
        result.best_fitness = agent.fitness;
        result.best_position = agent.position;
      }
    }
    result.trace.push_back(result.best_fitness);
  }
  return result;
}

}  // namespace woac::woa
