#include <algorithm>

#include <omp.h>

#include "horo/kernels.hpp"
#include "kernels_detail.hpp"

namespace horo::omp {

std::vector<SweepRow> curvature_sweep(const ConformalMetric& metric,
                                      std::span<const Eigen::VectorXd> samples, double t) {
  const auto n = static_cast<long>(samples.size());
  std::vector<SweepRow> rows(samples.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) rows[i] = sweep_row(metric, samples[i], t);
  return rows;
}

IndexPairs segment_crossings(const std::vector<Eigen::Vector2d>& points, bool closed, int window,
                             double eps) {
  if (points.size() < 2) return {};
  const auto boxes = detail::segment_boxes(points, closed);
  const int segs = static_cast<int>(boxes.size());
  std::vector<IndexPairs> partial(omp_get_max_threads());
#pragma omp parallel
  {
    IndexPairs& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
    for (int i = 0; i < segs; ++i) detail::scan_row(points, boxes, closed, window, eps, i, mine);
  }
  IndexPairs out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

IndexPairs triangle_crossings(const std::vector<Eigen::Vector3d>& vertices,
                              const std::vector<std::array<int, 3>>& faces, double eps) {
  const IndexPairs candidates = triangle_candidates(vertices, faces, eps);
  const auto n = static_cast<long>(candidates.size());
  std::vector<char> hit(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (long k = 0; k < n; ++k) {
    const auto [a, b] = candidates[k];
    const std::array<Eigen::Vector3d, 3> ta{vertices[faces[a][0]], vertices[faces[a][1]],
                                            vertices[faces[a][2]]};
    const std::array<Eigen::Vector3d, 3> tb{vertices[faces[b][0]], vertices[faces[b][1]],
                                            vertices[faces[b][2]]};
    hit[k] = triangles_intersect(ta, tb, eps) ? 1 : 0;
  }
  IndexPairs out;
  for (long k = 0; k < n; ++k) {
    if (hit[k]) out.push_back(candidates[k]);
  }
  return out;
}

}  // namespace horo::omp
