#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "horo/conformal.hpp"
#include "horo/curves.hpp"
#include "horo/mesh.hpp"

namespace horo {

enum class PayloadKind { metric, curve, mesh };

struct GalleryParams {
  double rho0 = 0.5 * std::numbers::ln2;  // geodesic-sphere
  double cylinder_t = 1.0;                // cylinder-delaunay
  int resolution = 4096;                  // curve samples
  int mesh_u = 512;                       // alpha-product grid
  int mesh_v = 8;
  double mesh_half_length = 0.5;
};

struct GalleryEntry {
  std::string name;
  GalleryParams params;
  PayloadKind kind = PayloadKind::metric;
  std::optional<ConformalMetric> metric;
  std::optional<CurveImmersion> curve;
  std::optional<MeshImmersion> mesh;
  // Flow time at which the metric payload is immersed by default.
  double default_t = 0.0;
  // For band-chart metrics: the domain is |s| < band_half_width. Zero otherwise.
  double band_half_width = 0.0;
  std::string description;
};

/// geodesic-sphere, round-degenerate, incomplete-band, cylinder-delaunay,
/// alpha-curve, alpha-product.
std::vector<std::string> gallery_names();

/// Throws PreconditionError for an unknown name ("alpha" is accepted for
/// alpha-curve) or invalid parameters (rho0 = 0, cylinder_t <= 0).
GalleryEntry make_example(const std::string& name, const GalleryParams& params = {});

/// Deterministic grid of about `count` chart points for a metric entry. Band
/// entries: s in [-f, f] * band_half_width by longitude; sphere entries: a
/// square grid of stereographic coordinates in [-2, 2]^2.
std::vector<Eigen::VectorXd> sample_points(const GalleryEntry& entry, int count,
                                           double fraction = 0.8);

/// r(u) = sin(u/2) cos u, R(u) = cos(u/2) - cos(3u/2)/3.
MinkVector alpha_point(double u);
/// d alpha / du, analytic.
MinkVector alpha_velocity(double u);
/// The alpha-curve on [0, 4pi) with the horospherically convex normal.
CurveImmersion alpha_curve(int resolution = 4096);

}  // namespace horo
