#include <algorithm>
#include <limits>

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

double leach_c_cost(std::span<const NodeState> nodes, std::span<const int> ch_ids) {
  if (ch_ids.empty()) throw ContractViolation("leach_c_cost: no cluster heads");
  double total = 0.0;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    double best = std::numeric_limits<double>::infinity();
    for (int c : ch_ids) {
      best = std::min(best, squared_distance(n.position, nodes[static_cast<std::size_t>(c)].position));
    }
    total += best;
  }
  return total;
}

namespace {

// Nearest and second-nearest CH distance for every alive node, so a swap can
// be priced in O(alive nodes).
struct NearestTwo {
  std::vector<double> d1, d2;
  std::vector<int> slot1;  // index into the CH list
};

NearestTwo nearest_two(std::span<const Point> alive, std::span<const Point> heads) {
  NearestTwo nt;
  const double inf = std::numeric_limits<double>::infinity();
  nt.d1.assign(alive.size(), inf);
  nt.d2.assign(alive.size(), inf);
  nt.slot1.assign(alive.size(), -1);
  for (std::size_t j = 0; j < alive.size(); ++j) {
    for (std::size_t c = 0; c < heads.size(); ++c) {
      const double d = squared_distance(alive[j], heads[c]);
      if (d < nt.d1[j]) {
        nt.d2[j] = nt.d1[j];
        nt.d1[j] = d;
        nt.slot1[j] = static_cast<int>(c);
      } else if (d < nt.d2[j]) {
        nt.d2[j] = d;
      }
    }
  }
  return nt;
}

}  // namespace

ChAssignment select_chs_leach_c(const SelectionContext& ctx, const LeachCParams& params) {
  const Eligibility elig = eligible_nodes(ctx.nodes, ctx.k);
  if (elig.ids.empty()) throw SimulationTerminated("leach-c: no alive nodes");
  if (static_cast<int>(elig.ids.size()) <= ctx.k) {
    auto out = assign_members(ctx.nodes, elig.ids);
    out.eligibility_fallback = elig.fallback;
    return out;
  }

  std::vector<Point> alive;
  for (const auto& n : ctx.nodes) {
    if (n.alive) alive.push_back(n.position);
  }

  // Random initial K-subset of the eligible pool (partial Fisher-Yates).
  std::vector<int> pool = elig.ids;
  const auto k = static_cast<std::size_t>(ctx.k);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + uniform_index(ctx.rng, pool.size() - i)]);
  }
  std::vector<int> heads(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<int> others(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
  auto pos = [&](int id) { return ctx.nodes[static_cast<std::size_t>(id)].position; };

  std::vector<Point> head_pts;
  auto refresh = [&] {
    head_pts.clear();
    for (int h : heads) head_pts.push_back(pos(h));
    return nearest_two(alive, head_pts);
  };
  NearestTwo nt = refresh();
  double cost = 0.0;
  for (double d : nt.d1) cost += d;

  // Steepest descent over single swaps (one CH out, one eligible non-CH in).
  for (int sweep = 0; sweep < params.max_sweeps; ++sweep) {
    double best_cost = cost;
    std::size_t best_h = 0, best_o = 0;
    bool found = false;
    for (std::size_t o = 0; o < others.size(); ++o) {
      const Point cand = pos(others[o]);
      for (std::size_t h = 0; h < heads.size(); ++h) {
        double c = 0.0;
        for (std::size_t j = 0; j < alive.size(); ++j) {
          const double keep = nt.slot1[j] == static_cast<int>(h) ? nt.d2[j] : nt.d1[j];
          c += std::min(keep, squared_distance(alive[j], cand));
        }
        if (c < best_cost - 1e-12 * cost) {
          best_cost = c;
          best_h = h;
          best_o = o;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(heads[best_h], others[best_o]);
    nt = refresh();
    cost = best_cost;
  }

  auto out = assign_members(ctx.nodes, heads);
  out.eligibility_fallback = elig.fallback;
  return out;
}

}  // namespace woac
