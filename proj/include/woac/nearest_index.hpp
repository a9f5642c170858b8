#pragma once

#include <span>
#include <vector>

#include "woac/network.hpp"

namespace woac {

/// Exact nearest-point lookup over a fixed point set. The query box is
/// rasterized; each cell keeps only the points that can be nearest to some
/// location inside it, so most lookups resolve without a distance test.
/// Ties resolve to the lowest index. Queries outside the box fall back to a
/// linear scan.
class NearestIndex {
 public:
  NearestIndex() = default;
  NearestIndex(std::span<const Point> points, Point box_min, Point box_max);

  /// Index into the original point span. Requires a non-empty set.
  int nearest(Point q) const;
  int nearest_linear(Point q) const;

  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point> points_;
  std::vector<int> cell_start_;  // CSR layout over raster cells
  std::vector<int> cell_items_;
  Point origin_;
  double cell_ = 1.0;
  double inv_cell_ = 1.0;
  int nx_ = 0;
  int ny_ = 0;
};

}  // namespace woac
