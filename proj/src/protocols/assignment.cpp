#include <algorithm>

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

ChAssignment assign_members(std::span<const NodeState> nodes, std::vector<int> ch_ids) {
  if (ch_ids.empty()) throw ContractViolation("assign_members: no cluster heads");
  std::sort(ch_ids.begin(), ch_ids.end());
  ch_ids.erase(std::unique(ch_ids.begin(), ch_ids.end()), ch_ids.end());
  for (int id : ch_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes.size() ||
        !nodes[static_cast<std::size_t>(id)].alive) {
      throw ContractViolation("assign_members: cluster head must be an alive node");
    }
  }

  ChAssignment out;
  out.member_of.assign(nodes.size(), ChAssignment::kNone);
  for (const auto& n : nodes) {
    if (!n.alive || std::binary_search(ch_ids.begin(), ch_ids.end(), n.id)) continue;
    int best = ch_ids.front();
    double best_d = squared_distance(n.position, nodes[static_cast<std::size_t>(best)].position);
    for (std::size_t c = 1; c < ch_ids.size(); ++c) {
      const double d =
          squared_distance(n.position, nodes[static_cast<std::size_t>(ch_ids[c])].position);
      if (d < best_d) {
        best_d = d;
        best = ch_ids[c];
      }
    }
    out.member_of[static_cast<std::size_t>(n.id)] = best;
  }
  out.ch_ids = std::move(ch_ids);
  return out;
}

ChAssignment direct_assignment(std::span<const NodeState> nodes) {
  ChAssignment out;
  out.member_of.assign(nodes.size(), ChAssignment::kNone);
  for (const auto& n : nodes) {
    if (n.alive) out.member_of[static_cast<std::size_t>(n.id)] = ChAssignment::kBaseStation;
  }
  return out;
}

}  // namespace woac
