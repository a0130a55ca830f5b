#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "horo/conformal.hpp"

namespace horo {

/// One row of a curvature sweep: Schouten eigenvalues of the metric rescaled by
/// t, principal curvatures of the immersion at t computed directly and through
/// lambda_kappa, and the defect of the Minkowski constraints and of the
/// pullback identity psi^* <,> = e^{2(rho + t)} g.
struct SweepRow {
  Eigen::VectorXd u;
  double rho = 0.0;
  Eigen::VectorXd lambda;
  Eigen::VectorXd kappa_extrinsic;
  Eigen::VectorXd kappa_from_lambda;
  double max_discrepancy = 0.0;
  double constraint_error = 0.0;
  double pullback_error = 0.0;
  bool ok = false;
  std::string error;
};

SweepRow sweep_row(const ConformalMetric& metric, const Eigen::VectorXd& u, double t);

/// Euclidean distance between segments [p0, p1] and [q0, q1] in the plane.
double segment_distance(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1,
                        const Eigen::Vector2d& q0, const Eigen::Vector2d& q1);

/// True when triangles a and b in R^3 intersect or come within eps of an edge
/// crossing.
bool triangles_intersect(const std::array<Eigen::Vector3d, 3>& a,
                         const std::array<Eigen::Vector3d, 3>& b, double eps);

using IndexPairs = std::vector<std::pair<int, int>>;

// Serial reference kernels. Outputs are sorted so that serial and OpenMP runs
// compare equal.
namespace serial {
std::vector<SweepRow> curvature_sweep(const ConformalMetric& metric,
                                      std::span<const Eigen::VectorXd> samples, double t);
IndexPairs segment_crossings(const std::vector<Eigen::Vector2d>& points, bool closed, int window,
                             double eps);
IndexPairs triangle_crossings(const std::vector<Eigen::Vector3d>& vertices,
                              const std::vector<std::array<int, 3>>& faces, double eps);
}  // namespace serial

namespace omp {
std::vector<SweepRow> curvature_sweep(const ConformalMetric& metric,
                                      std::span<const Eigen::VectorXd> samples, double t);
IndexPairs segment_crossings(const std::vector<Eigen::Vector2d>& points, bool closed, int window,
                             double eps);
IndexPairs triangle_crossings(const std::vector<Eigen::Vector3d>& vertices,
                              const std::vector<std::array<int, 3>>& faces, double eps);
}  // namespace omp

/// Sort-and-sweep candidate face pairs (bounding boxes overlapping within eps
/// along all axes, no shared vertex), ordered by first index.
IndexPairs triangle_candidates(const std::vector<Eigen::Vector3d>& vertices,
                               const std::vector<std::array<int, 3>>& faces, double eps);

}  // namespace horo
