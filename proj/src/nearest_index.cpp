#include "woac/nearest_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "woac/errors.hpp"

namespace woac {

NearestIndex::NearestIndex(std::span<const Point> points, Point box_min, Point box_max)
    : points_(points.begin(), points.end()), origin_(box_min) {
  if (points_.empty()) return;
  const double w = std::max(box_max.x - box_min.x, 1e-9);
  const double h = std::max(box_max.y - box_min.y, 1e-9);
  // About 64 cells per point, capped so large layouts stay cheap to build.
  const double cells = std::clamp(64.0 * static_cast<double>(points_.size()), 64.0, 65536.0);
  cell_ = std::sqrt(w * h / cells);
  inv_cell_ = 1.0 / cell_;
  nx_ = std::max(1, static_cast<int>(std::ceil(w * inv_cell_)));
  ny_ = std::max(1, static_cast<int>(std::ceil(h * inv_cell_)));

  // For a cell with center c and half-diagonal r, the nearest point to any q
  // in the cell lies within d(c, nearest to c) + 2r of c.
  const double half_diag = 0.5 * cell_ * std::sqrt(2.0);
  cell_start_.reserve(static_cast<std::size_t>(nx_ * ny_) + 1);
  cell_start_.push_back(0);
  std::vector<double> dist(points_.size());
  for (int cy = 0; cy < ny_; ++cy) {
    for (int cx = 0; cx < nx_; ++cx) {
      const Point c{origin_.x + (cx + 0.5) * cell_, origin_.y + (cy + 0.5) * cell_};
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < points_.size(); ++i) {
        dist[i] = distance(c, points_[i]);
        best = std::min(best, dist[i]);
      }
      const double reach = best + 2.0 * half_diag + 1e-9 * (1.0 + best);
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (dist[i] <= reach) cell_items_.push_back(static_cast<int>(i));
      }
      cell_start_.push_back(static_cast<int>(cell_items_.size()));
    }
  }
}

int NearestIndex::nearest_linear(Point q) const {
  if (points_.empty()) throw ContractViolation("NearestIndex: empty point set");
  int best = 0;
  double best_d = squared_distance(q, points_[0]);
  for (int i = 1; i < static_cast<int>(points_.size()); ++i) {
    const double d = squared_distance(q, points_[static_cast<std::size_t>(i)]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

int NearestIndex::nearest(Point q) const {
  if (points_.empty()) throw ContractViolation("NearestIndex: empty point set");
  const double fx = (q.x - origin_.x) * inv_cell_;
  const double fy = (q.y - origin_.y) * inv_cell_;
  if (!(fx >= 0.0 && fy >= 0.0 && fx <= nx_ && fy <= ny_)) return nearest_linear(q);
  const int cx = std::min(static_cast<int>(fx), nx_ - 1);
  const int cy = std::min(static_cast<int>(fy), ny_ - 1);
  const auto c = static_cast<std::size_t>(cy * nx_ + cx);
  const int begin = cell_start_[c];
  const int end = cell_start_[c + 1];
  if (end - begin == 1) return cell_items_[static_cast<std::size_t>(begin)];

  // Candidates are stored in ascending index order, so strict < keeps the
  // lowest index on ties.
  int best = cell_items_[static_cast<std::size_t>(begin)];
  double best_d = squared_distance(q, points_[static_cast<std::size_t>(best)]);
  for (int k = begin + 1; k < end; ++k) {
    const int i = cell_items_[static_cast<std::size_t>(k)];
    const double d = squared_distance(q, points_[static_cast<std::size_t>(i)]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace woac
