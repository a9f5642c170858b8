#include <algorithm>
#include <cmath>

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

int leach_epoch_length(double p) {
  if (!(p > 0.0) || p > 1.0) throw ContractViolation("leach: p must lie in (0, 1]");
  // 1/p for p = 0.1 evaluates a hair above 10; ceil must not round that up to 11.
  const double inv = 1.0 / p;
  const double nearest = std::round(inv);
  const double epoch = std::abs(inv - nearest) < 1e-9 * inv ? nearest : std::ceil(inv);
  return std::max(1, static_cast<int>(epoch));
}

double leach_threshold(double p, int round, bool elected_this_epoch) {
  if (round < 0) throw ContractViolation("leach: negative round");
  if (elected_this_epoch) return 0.0;
  const int epoch = leach_epoch_length(p);
  const double denom = 1.0 - p * static_cast<double>(round % epoch);
  if (denom <= 0.0) return 1.0;
  return std::min(1.0, p / denom);
}

ChAssignment select_chs_leach(const SelectionContext& ctx, double p_desired, LeachState& state) {
  const int epoch = leach_epoch_length(p_desired);
  if (state.elected_this_epoch.size() != ctx.nodes.size()) {
    state.elected_this_epoch.assign(ctx.nodes.size(), false);
  }
  if (ctx.round % epoch == 0) {
    std::fill(state.elected_this_epoch.begin(), state.elected_this_epoch.end(), false);
  }

  std::vector<int> heads;
  for (const auto& n : ctx.nodes) {
    if (!n.alive) continue;
    const auto idx = static_cast<std::size_t>(n.id);
    const double t = leach_threshold(p_desired, ctx.round, state.elected_this_epoch[idx]);
    if (uniform01(ctx.rng) < t) {
      heads.push_back(n.id);
      state.elected_this_epoch[idx] = true;
    }
  }
  if (heads.empty()) return direct_assignment(ctx.nodes);
  return assign_members(ctx.nodes, std::move(heads));
}

}  // namespace woac
