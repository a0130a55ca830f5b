#include <algorithm>
#include <cmath>
#include <exception>

#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/kernels.hpp"
#include "kernels_detail.hpp"

namespace horo {
namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                              const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len2 = d.squaredNorm();
  double s = len2 > 0.0 ? (p - a).dot(d) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return (a + s * d - p).norm();
}

// Segment [p, q] against triangle (a, b, c), Moller-Trumbore with slack eps in
// the barycentric and segment parameters.
bool segment_hits_triangle(const Eigen::Vector3d& p, const Eigen::Vector3d& q,
                           const std::array<Eigen::Vector3d, 3>& tri, double eps) {
  const Eigen::Vector3d dir = q - p;
  const Eigen::Vector3d e1 = tri[1] - tri[0];
  const Eigen::Vector3d e2 = tri[2] - tri[0];
  const Eigen::Vector3d h = dir.cross(e2);
  const double det = e1.dot(h);
  const double scale = e1.norm() * e2.norm() * dir.norm();
  if (std::abs(det) <= 1e-14 * scale) return false;  // parallel or coplanar
  const double inv = 1.0 / det;
  const Eigen::Vector3d s = p - tri[0];
  const double u = inv * s.dot(h);
  if (u < -eps || u > 1.0 + eps) return false;
  const Eigen::Vector3d qv = s.cross(e1);
  const double v = inv * dir.dot(qv);
  if (v < -eps || u + v > 1.0 + eps) return false;
  const double t = inv * e2.dot(qv);
  return t >= -eps && t <= 1.0 + eps;
}

}  // namespace

SweepRow sweep_row(const ConformalMetric& metric, const Eigen::VectorXd& u, double t) {
  SweepRow r;
  r.u = u;
  try {
    r.rho = metric.rho(u);
    r.lambda = schouten(rescale(metric, t), u).eigenvalues;
    const HypersurfacePoint p = immerse_with_frame(metric, u, t);
    r.kappa_extrinsic = curvatures_from_frame(p).values;
    r.kappa_from_lambda = r.lambda.unaryExpr([](double l) {
      return lambda_kappa(l, Orientation::canonical, Conversion::lambda_to_kappa);
    });
    // kappa decreases in lambda; keep both spectra ascending.
    std::sort(r.kappa_from_lambda.begin(), r.kappa_from_lambda.end());
    r.max_discrepancy = (r.kappa_extrinsic - r.kappa_from_lambda).cwiseAbs().maxCoeff();

    r.constraint_error = std::max({std::abs(mink_inner(p.phi, p.phi) + 1.0),
                                   std::abs(mink_inner(p.eta, p.eta) - 1.0),
                                   std::abs(mink_inner(p.phi, p.eta)),
                                   std::abs(mink_inner(p.psi, p.psi))});

    const auto n = u.size();
    Eigen::MatrixXd pulled(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        pulled(i, j) = mink_inner(p.tangents[i] + p.eta_tangents[i], p.tangents[j] + p.eta_tangents[j]);
      }
    }
    const Eigen::MatrixXd target =
        std::exp(2.0 * (metric.effective_rho(u) + t)) * metric.chart.metric(u);
    r.pullback_error = (pulled - target).cwiseAbs().maxCoeff() / target.cwiseAbs().maxCoeff();
    r.ok = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

double segment_distance(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1,
                        const Eigen::Vector2d& q0, const Eigen::Vector2d& q1) {
  const double o1 = cross2(p1 - p0, q0 - p0);
  const double o2 = cross2(p1 - p0, q1 - p0);
  const double o3 = cross2(q1 - q0, p0 - q0);
  const double o4 = cross2(q1 - q0, p1 - q0);
  if (((o1 < 0.0 && o2 > 0.0) || (o1 > 0.0 && o2 < 0.0)) &&
      ((o3 < 0.0 && o4 > 0.0) || (o3 > 0.0 && o4 < 0.0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(p0, q0, q1), point_segment_distance(p1, q0, q1),
                   point_segment_distance(q0, p0, p1), point_segment_distance(q1, p0, p1)});
}

bool triangles_intersect(const std::array<Eigen::Vector3d, 3>& a,
                         const std::array<Eigen::Vector3d, 3>& b, double eps) {
  for (int k = 0; k < 3; ++k) {
    if (segment_hits_triangle(a[k], a[(k + 1) % 3], b, eps)) return true;
    if (segment_hits_triangle(b[k], b[(k + 1) % 3], a, eps)) return true;
  }
  return false;
}

IndexPairs triangle_candidates(const std::vector<Eigen::Vector3d>& vertices,
                               const std::vector<std::array<int, 3>>& faces, double eps) {
  const int nf = static_cast<int>(faces.size());
  std::vector<Eigen::Vector3d> lo(nf), hi(nf);
  for (int f = 0; f < nf; ++f) {
    lo[f] = hi[f] = vertices.at(faces[f][0]);
    for (int k = 1; k < 3; ++k) {
      lo[f] = lo[f].cwiseMin(vertices.at(faces[f][k]));
      hi[f] = hi[f].cwiseMax(vertices.at(faces[f][k]));
    }
  }
  std::vector<int> order(nf);
  for (int f = 0; f < nf; ++f) order[f] = f;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return lo[x].x() < lo[y].x(); });

  IndexPairs out;
  for (int oi = 0; oi < nf; ++oi) {
    const int a = order[oi];
    for (int oj = oi + 1; oj < nf && lo[order[oj]].x() <= hi[a].x() + eps; ++oj) {
      const int b = order[oj];
      if (lo[b].y() > hi[a].y() + eps || lo[a].y() > hi[b].y() + eps) continue;
      if (lo[b].z() > hi[a].z() + eps || lo[a].z() > hi[b].z() + eps) continue;
      bool shared = false;
      for (int x : faces[a]) {
        for (int y : faces[b]) shared = shared || x == y;
      }
      if (!shared) out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Segment i runs from points[i] to points[(i + 1) % N].
std::vector<Box2> segment_boxes(const std::vector<Eigen::Vector2d>& points, bool closed) {
  const std::size_t n = points.size();
  const std::size_t segs = closed ? n : n - 1;
  std::vector<Box2> boxes(segs);
  for (std::size_t i = 0; i < segs; ++i) {
    const auto& a = points[i];
    const auto& b = points[(i + 1) % n];
    if ((a - b).norm() == 0.0) {
      throw PreconditionError("self_intersections: degenerate (zero-length) segment");
    }
    boxes[i] = {a.cwiseMin(b), a.cwiseMax(b)};
  }
  return boxes;
}

void scan_row(const std::vector<Eigen::Vector2d>& points, const std::vector<Box2>& boxes,
              bool closed, int window, double eps, int i, IndexPairs& out) {
  const int n = static_cast<int>(points.size());
  const int segs = static_cast<int>(boxes.size());
  const Box2& bi = boxes[i];
  for (int j = i + window + 1; j < segs; ++j) {
    if (closed && segs - (j - i) <= window) continue;
    const Box2& bj = boxes[j];
    if (bj.lo.x() > bi.hi.x() + eps || bi.lo.x() > bj.hi.x() + eps) continue;
    if (bj.lo.y() > bi.hi.y() + eps || bi.lo.y() > bj.hi.y() + eps) continue;
    if (segment_distance(points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]) <= eps) {
      out.emplace_back(i, j);
    }
  }
}

}  // namespace detail

namespace serial {

std::vector<SweepRow> curvature_sweep(const ConformalMetric& metric,
                                      std::span<const Eigen::VectorXd> samples, double t) {
  std::vector<SweepRow> rows;
  rows.reserve(samples.size());
  for (const auto& u : samples) rows.push_back(sweep_row(metric, u, t));
  return rows;
}

IndexPairs segment_crossings(const std::vector<Eigen::Vector2d>& points, bool closed, int window,
                             double eps) {
  if (points.size() < 2) return {};
  const auto boxes = detail::segment_boxes(points, closed);
  IndexPairs out;
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    detail::scan_row(points, boxes, closed, window, eps, i, out);
  }
  return out;
}

IndexPairs triangle_crossings(const std::vector<Eigen::Vector3d>& vertices,
                              const std::vector<std::array<int, 3>>& faces, double eps) {
  IndexPairs out;
  for (const auto& [a, b] : triangle_candidates(vertices, faces, eps)) {
    const std::array<Eigen::Vector3d, 3> ta{vertices[faces[a][0]], vertices[faces[a][1]],
                                            vertices[faces[a][2]]};
    const std::array<Eigen::Vector3d, 3> tb{vertices[faces[b][0]], vertices[faces[b][1]],
                                            vertices[faces[b][2]]};
    if (triangles_intersect(ta, tb, eps)) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace serial
}  // namespace horo
