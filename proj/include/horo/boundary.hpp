#pragma once

#include <vector>

#include <Eigen/Dense>

#include "horo/gallery.hpp"

namespace horo {

struct BoundaryOptions {
  double escape_threshold = 0.999;
  double cluster_radius = 0.05;  // radians
  // Flow time; negative means max(entry.default_t, 1).
  double t = -1.0;
  int angular_samples = 64;
  int depth = 8;  // probes at distance 10^-1 ... 10^-depth from the boundary
};

struct IdealCluster {
  Eigen::VectorXd center;  // unit vector of S^n
  std::size_t members = 0;
};

struct BoundaryReport {
  std::vector<IdealCluster> clusters;
  std::size_t probes = 0;
  std::size_t escaped = 0;
  double t = 0.0;
};

/// Probes the domain towards its boundary (for band entries s -> +-edge; for
/// compact entries a full latitude/longitude sweep), immerses each probe,
/// keeps Poincare-ball images with norm above the escape threshold and groups
/// their directions greedily by angle. A compact image gives an empty report.
/// Throws PreconditionError for entries without a metric payload.
BoundaryReport boundary_at_infinity(const GalleryEntry& entry, const BoundaryOptions& options = {});

}  // namespace horo
