#include <algorithm>
#include <numeric>

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

std::vector<double> node_scores(std::span<const NodeState> nodes, const FitnessWeights& w) {
  const double r2 = w.neighbor_radius * w.neighbor_radius;
  std::vector<int> count(nodes.size(), 0);
  std::vector<double> energy(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].alive) continue;
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!nodes[j].alive) continue;
      if (squared_distance(nodes[i].position, nodes[j].position) <= r2) {
        ++count[i];
        ++count[j];
        energy[i] += nodes[j].residual_energy;
        energy[j] += nodes[i].residual_energy;
      }
    }
  }
  std::vector<double> scores(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive) scores[i] = w.p1 * count[i] + w.p2 * energy[i];
  }
  return scores;
}

double ch_fitness(std::span<const int> candidate_ids, const SelectionContext& ctx,
                  const FitnessWeights& w) {
  const double r2 = w.neighbor_radius * w.neighbor_radius;
  double total = 0.0;
  for (int id : candidate_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= ctx.nodes.size()) {
      throw ContractViolation("ch_fitness: unknown candidate id");
    }
    const auto& ch = ctx.nodes[static_cast<std::size_t>(id)];
    if (!ch.alive) throw ContractViolation("ch_fitness: dead candidate");
    int neighbors = 0;
    double energy = 0.0;
    for (const auto& n : ctx.nodes) {
      if (!n.alive || n.id == id) continue;
      if (squared_distance(ch.position, n.position) <= r2) {
        ++neighbors;
        energy += n.residual_energy;
      }
    }
    total += w.p1 * neighbors + w.p2 * energy;
  }
  return total;
}

Eligibility eligible_nodes(std::span<const NodeState> nodes, int k) {
  Eligibility out;
  std::vector<int> alive;
  double sum = 0.0;
  for (const auto& n : nodes) {
    if (n.alive) {
      alive.push_back(n.id);
      sum += n.residual_energy;
    }
  }
  if (alive.empty()) return out;
  const double mean = sum / static_cast<double>(alive.size());
  // Relative slack so that equal energies all qualify despite rounding in the mean.
  const double cutoff = mean - 1e-12 * mean;
  for (int id : alive) {
    if (nodes[static_cast<std::size_t>(id)].residual_energy >= cutoff) out.ids.push_back(id);
  }
  if (static_cast<int>(out.ids.size()) >= k) return out;

  out.fallback = true;
  std::stable_sort(alive.begin(), alive.end(), [&](int a, int b) {
    return nodes[static_cast<std::size_t>(a)].residual_energy >
           nodes[static_cast<std::size_t>(b)].residual_energy;
  });
  alive.resize(std::min<std::size_t>(alive.size(), static_cast<std::size_t>(k)));
  std::sort(alive.begin(), alive.end());
  out.ids = std::move(alive);
  return out;
}

CandidateDecoder::CandidateDecoder(std::span<const NodeState> nodes, std::vector<int> eligible,
                                   int k, std::vector<double> scores, Field field)
    : eligible_(std::move(eligible)), field_(field), k_(k) {
  if (eligible_.empty()) throw ContractViolation("CandidateDecoder: no eligible nodes");
  if (k_ < 1) throw ContractViolation("CandidateDecoder: k must be positive");
  std::vector<Point> pts;
  pts.reserve(eligible_.size());
  scores_.reserve(eligible_.size());
  for (int id : eligible_) {
    pts.push_back(nodes[static_cast<std::size_t>(id)].position);
    scores_.push_back(scores[static_cast<std::size_t>(id)]);
  }
  index_ = NearestIndex(pts, Point{0.0, 0.0}, Point{field.width, field.height});
}

int CandidateDecoder::snap(double x, double y) const { return index_.nearest(Point{x, y}); }

std::vector<int> CandidateDecoder::decode(std::span<const double> position) const {
  if (position.size() != static_cast<std::size_t>(2 * k_)) {
    throw ContractViolation("CandidateDecoder: position must hold k (x, y) pairs");
  }
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(k_));
  for (int c = 0; c < k_; ++c) {
    ids.push_back(eligible_[static_cast<std::size_t>(snap(position[2 * c], position[2 * c + 1]))]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

double CandidateDecoder::evaluate(std::span<const double> position) const {
  int slots[256];
  std::vector<int> heap_slots;
  int* seen = slots;
  if (k_ > 256) {
    heap_slots.resize(static_cast<std::size_t>(k_));
    seen = heap_slots.data();
  }
  int distinct = 0;
  double total = 0.0;
  for (int c = 0; c < k_; ++c) {
    const int s = snap(position[2 * c], position[2 * c + 1]);
    bool dup = false;
    for (int j = 0; j < distinct; ++j) {
      if (seen[j] == s) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    seen[distinct++] = s;
    total += scores_[static_cast<std::size_t>(s)];
  }
  return total * static_cast<double>(distinct) / static_cast<double>(k_);
}

std::vector<woa::Interval> CandidateDecoder::bounds() const {
  std::vector<woa::Interval> b;
  b.reserve(static_cast<std::size_t>(2 * k_));
  for (int c = 0; c < k_; ++c) {
    b.push_back({0.0, field_.width});
    b.push_back({0.0, field_.height});
  }
  return b;
}

}  // namespace woac
