// WOA-based cluster-head selection and its PSO counterpart. Both search the
// same space: K concatenated (x, y) pairs over the field, each snapped to the
// nearest eligible node.

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

namespace {

struct Prepared {
  Eligibility eligibility;
  std::vector<double> scores;
};

Prepared prepare(const SelectionContext& ctx, const FitnessWeights& w) {
  Prepared p{eligible_nodes(ctx.nodes, ctx.k), {}};
  if (p.eligibility.ids.empty()) throw SimulationTerminated("no alive nodes to select from");
  if (static_cast<int>(p.eligibility.ids.size()) > ctx.k) p.scores = node_scores(ctx.nodes, w);
  return p;
}

// With no more candidates than CH slots the distinct-count penalty makes the
// full pool the optimum, so the search is skipped.
bool pool_is_forced(const Prepared& p, int k) {
  return static_cast<int>(p.eligibility.ids.size()) <= k;
}

ChAssignment finish(const SelectionContext& ctx, std::vector<int> heads, bool fallback) {
  auto out = assign_members(ctx.nodes, std::move(heads));
  out.eligibility_fallback = fallback;
  return out;
}

}  // namespace

ChAssignment select_chs_woa(const SelectionContext& ctx, const FitnessWeights& w,
                            const WoaSelectorParams& params) {
  Prepared prep = prepare(ctx, w);
  if (pool_is_forced(prep, ctx.k)) {
    return finish(ctx, prep.eligibility.ids, prep.eligibility.fallback);
  }
  const CandidateDecoder decoder(ctx.nodes, prep.eligibility.ids, ctx.k, std::move(prep.scores),
                                 ctx.field);
  woa::Params wp;
  wp.agents = params.agents;
  wp.iterations = params.iterations;
  wp.spiral_b = params.spiral_b;
  wp.mode = params.mode;
  wp.bounds = decoder.bounds();
  const auto result = woa::optimize(
      [&decoder](std::span<const double> x) { return decoder.evaluate(x); },
      woa::Sense::kMaximize, wp, ctx.rng);
  return finish(ctx, decoder.decode(result.best_position), prep.eligibility.fallback);
}

ChAssignment select_chs_pso(const SelectionContext& ctx, const FitnessWeights& w,
                            const PsoSelectorParams& params) {
  Prepared prep = prepare(ctx, w);
  if (pool_is_forced(prep, ctx.k)) {
    return finish(ctx, prep.eligibility.ids, prep.eligibility.fallback);
  }
  const CandidateDecoder decoder(ctx.nodes, prep.eligibility.ids, ctx.k, std::move(prep.scores),
                                 ctx.field);
  pso::Params pp;
  pp.particles = params.particles;
  pp.iterations = params.iterations;
  pp.inertia = params.inertia;
  pp.cognitive = params.cognitive;
  pp.social = params.social;
  pp.velocity_clamp = params.velocity_clamp;
  pp.bounds = decoder.bounds();
  const auto result = pso::optimize(
      [&decoder](std::span<const double> x) { return decoder.evaluate(x); },
      pso::Sense::kMaximize, pp, ctx.rng);
  return finish(ctx, decoder.decode(result.best_position), prep.eligibility.fallback);
}

}  // namespace woac
