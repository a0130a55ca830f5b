#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "horo/conformal.hpp"
#include "horo/curves.hpp"
#include "horo/minkowski.hpp"

namespace horo {

/// Triangle mesh in the Poincare ball B^3. `params` holds the source
/// parameters of each vertex.
struct MeshImmersion {
  std::vector<BallPoint> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<Eigen::Vector2d> params;
};

struct TriangleCrossing {
  int a = 0;
  int b = 0;
};

/// Face pairs that intersect (or come within eps) and share no vertex. Pairs
/// are pruned by a sweep over bounding boxes along x.
std::vector<TriangleCrossing> self_intersections(const MeshImmersion& mesh,
                                                 double eps = kIntersectionEps);

/// The product of a curve in H^2 with the boosts in the (e0, e3) plane:
/// (phi0 cosh v, phi1, phi2, phi0 sinh v), u periodic, v in [-half_length,
/// half_length].
MeshImmersion curve_product_mesh(const CurveImmersion& curve, int m_u, int m_v,
                                 double half_length);

/// Latitude/longitude grid of S^2 (latitude measured from the plane x_2 = 0,
/// |latitude| <= lat_max), pushed through the chart, immersed at flow time t and
/// mapped to the ball. Throws when a vertex is outside the chart or domain.
MeshImmersion mesh_metric_immersion(const ConformalMetric& metric, double t, int m_lat, int m_lon,
                                    double lat_max);

}  // namespace horo
