#include "horo/mesh.hpp"

#include <cmath>
#include <numbers>

#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/kernels.hpp"

namespace horo {

std::vector<TriangleCrossing> self_intersections(const MeshImmersion& mesh, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("self_intersections: eps must be positive");
  std::vector<Eigen::Vector3d> v;
  v.reserve(mesh.vertices.size());
  for (const auto& p : mesh.vertices) {
    if (p.size() != 3) throw PreconditionError("self_intersections: mesh must live in B^3");
    v.emplace_back(p.coords());
  }
  std::vector<TriangleCrossing> out;
  for (const auto& [a, b] : omp::triangle_crossings(v, mesh.faces, eps)) out.push_back({a, b});
  return out;
}

MeshImmersion curve_product_mesh(const CurveImmersion& curve, int m_u, int m_v,
                                 double half_length) {
  if (m_u < 3 || m_v < 1) throw PreconditionError("curve_product_mesh: grid too small");
  MeshImmersion mesh;
  for (int i = 0; i < m_u; ++i) {
    const double u = curve.period * i / m_u;
    const MinkVector a = curve.phi(u);
    for (int j = 0; j <= m_v; ++j) {
      const double v = -half_length + 2.0 * half_length * j / m_v;
      const double x0 = a[0] * std::cosh(v);
      Eigen::VectorXd b(3);
      b << a[1], a[2], a[0] * std::sinh(v);
      mesh.vertices.emplace_back(b / (1.0 + x0));
      mesh.params.emplace_back(u, v);
    }
  }
  auto id = [&](int i, int j) { return (i % m_u) * (m_v + 1) + j; };
  for (int i = 0; i < m_u; ++i) {
    for (int j = 0; j < m_v; ++j) {
      mesh.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return mesh;
}

MeshImmersion mesh_metric_immersion(const ConformalMetric& metric, double t, int m_lat, int m_lon,
                                    double lat_max) {
  if (metric.chart.dim() != 2) throw PreconditionError("mesh export needs n = 2");
  if (m_lat < 1 || m_lon < 3) throw PreconditionError("mesh export: grid too small");
  if (!(lat_max > 0.0 && lat_max < 0.5 * std::numbers::pi)) {
    throw PreconditionError("mesh export: lat_max must lie in (0, pi/2)");
  }
  MeshImmersion mesh;
  for (int k = 0; k <= m_lat; ++k) {
    const double lat = -lat_max + 2.0 * lat_max * k / m_lat;
    for (int l = 0; l < m_lon; ++l) {
      const double lon = 2.0 * std::numbers::pi * l / m_lon;
      Eigen::VectorXd x(3);
      x << std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat);
      const Eigen::VectorXd u = metric.chart.project(x);
      mesh.vertices.push_back(to_poincare_ball(immerse(metric, u, t).phi));
      mesh.params.emplace_back(lat, lon);
    }
  }
  auto id = [&](int k, int l) { return k * m_lon + (l % m_lon); };
  for (int k = 0; k < m_lat; ++k) {
    for (int l = 0; l < m_lon; ++l) {
      mesh.faces.push_back({id(k, l), id(k, l + 1), id(k + 1, l + 1)});
      mesh.faces.push_back({id(k, l), id(k + 1, l + 1), id(k + 1, l)});
    }
  }
  return mesh;
}

}  // namespace horo
