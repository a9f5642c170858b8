#pragma once

// Cluster-head selection strategies. Every strategy sees the same
// SelectionContext (the base station's view after the setup phase) and
// returns a ChAssignment.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "woac/energy.hpp"
#include "woac/nearest_index.hpp"
#include "woac/network.hpp"
#include "woac/pso.hpp"
#include "woac/rng.hpp"
#include "woac/woa.hpp"

namespace woac {

struct SelectionContext {
  std::span<const NodeState> nodes;  // alive and dead, indexed by id
  int round = 0;                     // 0-based round index
  int k = 1;                         // requested cluster-head count
  Point bs_position;
  RadioParams radio;
  Field field;
  Rng& rng;
};

struct FitnessWeights {
  double p1 = 0.7;
  double p2 = 0.3;
  double neighbor_radius = 30.0;  // meters
};

struct ChAssignment {
  static constexpr int kBaseStation = -1;
  static constexpr int kNone = -2;  // dead nodes and cluster heads themselves

  std::vector<int> ch_ids;     // sorted ascending
  std::vector<int> member_of;  // per node id: CH id, kBaseStation or kNone
  bool eligibility_fallback = false;
};

// ---- fitness and eligibility --------------------------------------------

/// p1·|N(i)| + p2·Σ residual energy of N(i) for every node i; N(i) is the set
/// of other alive nodes within the neighbor radius. Dead nodes score 0.
std::vector<double> node_scores(std::span<const NodeState> nodes, const FitnessWeights& w);

/// Sum of node scores over the candidates. Throws ContractViolation on a dead
/// or unknown candidate.
double ch_fitness(std::span<const int> candidate_ids, const SelectionContext& ctx,
                  const FitnessWeights& w);

struct Eligibility {
  std::vector<int> ids;   // ascending
  bool fallback = false;  // fewer than k at or above the mean energy
};

/// Alive nodes with residual energy >= the alive mean. When that leaves fewer
/// than k nodes, the k highest-energy alive nodes (all alive nodes if fewer).
Eligibility eligible_nodes(std::span<const NodeState> nodes, int k);

/// Maps a flat (x0, y0, x1, y1, ...) vector to cluster-head candidates by
/// snapping every pair to its nearest eligible node. Shared by the WOA and
/// PSO selectors.
class CandidateDecoder {
 public:
  CandidateDecoder(std::span<const NodeState> nodes, std::vector<int> eligible, int k,
                   std::vector<double> scores, Field field);

  /// Distinct snapped node ids, ascending.
  std::vector<int> decode(std::span<const double> position) const;
  /// ch_fitness of the distinct set scaled by distinct_count / k.
  double evaluate(std::span<const double> position) const;

  std::vector<woa::Interval> bounds() const;
  int k() const { return k_; }

 private:
  int snap(double x, double y) const;

  std::vector<int> eligible_;
  std::vector<double> scores_;  // per eligible slot
  NearestIndex index_;
  Field field_;
  int k_;
};

// ---- assignment ---------------------------------------------------------

/// Each alive non-CH node joins its Euclidean-nearest CH; ties go to the
/// lowest CH id. ch_ids must be non-empty and alive.
ChAssignment assign_members(std::span<const NodeState> nodes, std::vector<int> ch_ids);

/// Every alive node reports straight to the base station.
ChAssignment direct_assignment(std::span<const NodeState> nodes);

// ---- strategies ---------------------------------------------------------

ChAssignment select_chs_dt(const SelectionContext& ctx);

/// LEACH threshold T(n) = p / (1 - p·(r mod ⌈1/p⌉)), or 0 if the node
/// already served during the current epoch.
double leach_threshold(double p, int round, bool elected_this_epoch);
int leach_epoch_length(double p);

struct LeachState {
  std::vector<bool> elected_this_epoch;
};

ChAssignment select_chs_leach(const SelectionContext& ctx, double p_desired, LeachState& state);

struct LeachCParams {
  int max_sweeps = 200;
};

/// Sum over alive nodes of squared distance to the nearest CH.
double leach_c_cost(std::span<const NodeState> nodes, std::span<const int> ch_ids);
ChAssignment select_chs_leach_c(const SelectionContext& ctx, const LeachCParams& params = {});

struct WoaSelectorParams {
  std::size_t agents = 30;
  std::size_t iterations = 500;
  double spiral_b = 1.0;
  woa::CoefficientMode mode = woa::CoefficientMode::kVector;
};

ChAssignment select_chs_woa(const SelectionContext& ctx, const FitnessWeights& w,
                            const WoaSelectorParams& params);

struct PsoSelectorParams {
  std::size_t particles = 30;
  std::size_t iterations = 500;
  double inertia = 0.72;
  double cognitive = 1.49;
  double social = 1.49;
  double velocity_clamp = 0.2;
};

ChAssignment select_chs_pso(const SelectionContext& ctx, const FitnessWeights& w,
                            const PsoSelectorParams& params);

/// Stateful wrapper chosen by name. LEACH keeps epoch bookkeeping across
/// rounds, so a strategy instance belongs to exactly one simulation.
class ClusterStrategy {
 public:
  virtual ~ClusterStrategy() = default;
  virtual std::string_view name() const = 0;
  /// Label used in reports (the PSO baseline reports as "PSO-C-like").
  virtual std::string_view label() const = 0;
  virtual ChAssignment select(const SelectionContext& ctx) = 0;
};

struct StrategyParams {
  FitnessWeights fitness;
  WoaSelectorParams woa;
  PsoSelectorParams pso;
  LeachCParams leach_c;
  double leach_p = 0.0;  // <= 0 means K / node_count
};

inline constexpr std::string_view kStrategyNames[] = {"dt", "leach", "leach-c", "pso", "woa"};

bool is_strategy_name(std::string_view name);

/// Throws ConfigError for an unknown name.
std::unique_ptr<ClusterStrategy> make_strategy(std::string_view name, const StrategyParams& params,
                                               int node_count, int k);

}  // namespace woac
