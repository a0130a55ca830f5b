#include "horo/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "horo/correspondence.hpp"
#include "horo/error.hpp"

namespace horo {
namespace {

std::vector<Eigen::VectorXd> boundary_probes(const GalleryEntry& entry,
                                             const BoundaryOptions& options) {
  const ConformalMetric& metric = *entry.metric;
  const int n = metric.chart.dim();
  const int m = options.angular_samples;
  std::vector<Eigen::VectorXd> probes;

  if (entry.band_half_width > 0.0) {
    if (n != 2) throw PreconditionError("boundary_at_infinity: band probes need n = 2");
    for (int k = 1; k <= options.depth; ++k) {
      const double s = entry.band_half_width - std::pow(10.0, -k);
      for (double sign : {-1.0, 1.0}) {
        for (int l = 0; l < m; ++l) {
          Eigen::VectorXd u(2);
          u << sign * s, -std::numbers::pi + 2.0 * std::numbers::pi * l / m;
          probes.push_back(u);
        }
      }
    }
    return probes;
  }

  // No boundary marker: sweep the whole sphere, skipping the chart's pole.
  if (n != 2) throw PreconditionError("boundary_at_infinity: sphere sweep needs n = 2");
  for (int k = 1; k < m; ++k) {
    const double lat = -0.5 * std::numbers::pi + std::numbers::pi * k / m;
    for (int l = 0; l < m; ++l) {
      const double lon = 2.0 * std::numbers::pi * l / m;
      Eigen::VectorXd x(3);
      x << std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat);
      probes.push_back(metric.chart.project(x));
    }
  }
  return probes;
}

}  // namespace

BoundaryReport boundary_at_infinity(const GalleryEntry& entry, const BoundaryOptions& options) {
  if (!entry.metric) throw PreconditionError("boundary_at_infinity: entry has no metric payload");
  if (!(options.escape_threshold > 0.0 && options.escape_threshold < 1.0)) {
    throw PreconditionError("boundary_at_infinity: escape threshold must lie in (0, 1)");
  }
  BoundaryReport report;
  report.t = options.t >= 0.0 ? options.t : std::max(entry.default_t, 1.0);

  struct Cluster {
    Eigen::VectorXd seed;
    Eigen::VectorXd sum;
    std::size_t members = 0;
  };
  std::vector<Cluster> clusters;

  for (const auto& u : boundary_probes(entry, options)) {
    ++report.probes;
    const HypersurfacePoint p = immerse(*entry.metric, u, report.t);
    const BallPoint b = to_poincare_ball(p.phi);
    if (b.norm() <= options.escape_threshold) continue;
    ++report.escaped;
    const Eigen::VectorXd dir = b.coords() / b.norm();
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return std::acos(std::clamp(c.seed.dot(dir), -1.0, 1.0)) <= options.cluster_radius;
    });
    if (it == clusters.end()) {
      clusters.push_back({dir, dir, 1});
    } else {
      it->sum += dir;
      ++it->members;
    }
  }
  for (const auto& c : clusters) report.clusters.push_back({c.sum.normalized(), c.members});
  return report;
}

}  // namespace horo
