#pragma once

// Continuous-domain Whale Optimization Algorithm. Independent of the sensor
// network application: anything with a box-bounded real objective can use it.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "woac/rng.hpp"

namespace woac::woa {

enum class Sense { kMaximize, kMinimize };

/// How the A and C coefficients are drawn.
///   kVector: one random draw per dimension; |A| is the Euclidean norm.
///   kScalar: a single draw broadcast to every dimension; |A| is its absolute value.
enum class CoefficientMode { kVector, kScalar };

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

struct SearchAgent {
  std::vector<double> position;
  double fitness = 0.0;
};

struct Coefficients {
  double a = 0.0;
  std::vector<double> A;
  std::vector<double> C;
  double l = 0.0;
  double p = 0.0;
  /// Magnitude compared against 1 to choose between encircling and exploring.
  double a_magnitude = 0.0;
};

struct Params {
  std::size_t agents = 30;
  std::size_t iterations = 500;
  double spiral_b = 1.0;
  std::vector<Interval> bounds;
  CoefficientMode mode = CoefficientMode::kVector;

  std::size_t dimension() const { return bounds.size(); }
  /// Throws ConfigError if the parameter set is unusable.
  void validate() const;
};

struct BranchCounts {
  std::size_t encircle = 0;
  std::size_t explore = 0;
  std::size_t spiral = 0;
};

struct Result {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  /// Best-so-far fitness after each iteration (size == iterations).
  std::vector<double> trace;
  BranchCounts branches;
};

using Objective = std::function<double(std::span<const double>)>;

/// Coefficients for iteration t of t_max: a decays linearly from 2 to 0,
/// A = 2ar - a, C = 2r', l ~ U[-1,1], p ~ U[0,1].
Coefficients compute_coefficients(std::size_t t, std::size_t t_max, std::size_t dimension,
                                  CoefficientMode mode, Rng& rng);

/// X* - A∘|C∘X* - X|
std::vector<double> encircle_update(std::span<const double> x, std::span<const double> best,
                                    std::span<const double> A, std::span<const double> C);

/// |X* - X| e^{bl} cos(2πl) + X*
std::vector<double> spiral_update(std::span<const double> x, std::span<const double> best,
                                  double b, double l);

/// X_rand - A∘|C∘X_rand - X|
std::vector<double> explore_update(std::span<const double> x, std::span<const double> other,
                                   std::span<const double> A, std::span<const double> C);

/// True when `candidate` is strictly better than `incumbent` under `sense`.
bool improves(double candidate, double incumbent, Sense sense);

Result optimize(const Objective& objective, Sense sense, const Params& params, Rng& rng);

}  // namespace woac::woa
