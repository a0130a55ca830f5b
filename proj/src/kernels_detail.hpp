#pragma once

#include <vector>

#include <Eigen/Dense>

#include "horo/kernels.hpp"

namespace horo::detail {

struct Box2 {
  Eigen::Vector2d lo, hi;
};

// Bounding boxes of the polygon segments; throws on a zero-length segment.
std::vector<Box2> segment_boxes(const std::vector<Eigen::Vector2d>& points, bool closed);

// Appends the crossings (i, j), j > i + window, of segment i.
void scan_row(const std::vector<Eigen::Vector2d>& points, const std::vector<Box2>& boxes,
              bool closed, int window, double eps, int i, IndexPairs& out);

}  // namespace horo::detail
