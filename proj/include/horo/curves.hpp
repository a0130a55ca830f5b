#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "horo/minkowski.hpp"

namespace horo {

/// Curve u -> (phi(u), eta(u)) in H^2 with unit normal eta, u in [0, period).
/// `phi0` and `eta0` describe the base curve; `t` is the normal-flow time
/// applied on evaluation.
struct CurveImmersion {
  std::function<MinkVector(double)> phi0;
  std::function<MinkVector(double)> eta0;
  double period = 0.0;
  bool closed = true;
  int resolution = 4096;
  double t = 0.0;

  MinkVector phi(double u) const;
  MinkVector eta(double u) const;
  /// Same curve flowed a further dt along its normal.
  CurveImmersion flowed(double dt) const;
  CurveImmersion with_resolution(int m) const;
  /// u_i = i * period / m for i < m (closed) or i <= m (open).
  std::vector<double> parameters() const;
};

/// Circle of hyperbolic radius r about (1, 0, 0) with the outward normal
/// (principal curvature -coth r).
CurveImmersion geodesic_circle(double radius, int resolution = 4096);

/// kappa(u) = -<eta', phi'>/<phi', phi'> by central differences with step h.
double curve_curvature(const CurveImmersion& curve, double u, double h = 1e-5);
std::vector<double> curve_curvatures(const CurveImmersion& curve, double h = 1e-5);

/// Degree of the hyperbolic Gauss map u -> G(u) in S^1, from the unwrapped
/// angle of G at the sample parameters. Throws PreconditionError for an open
/// curve and NumericalError when two consecutive angles differ by pi or more.
int gauss_winding(const CurveImmersion& curve);

/// Poincare-disk images of phi at the sample parameters.
std::vector<Eigen::Vector2d> curve_ball_points(const CurveImmersion& curve);

inline constexpr double kIntersectionEps = 1e-9;
inline constexpr int kAdjacencyWindow = 2;

struct CurveCrossing {
  int i = 0;
  int j = 0;
  double u_i = 0.0;
  double u_j = 0.0;
};

/// Segment pairs of the sampled polygon (Poincare disk) closer than eps,
/// excluding pairs whose indices differ by at most `window` (cyclically for
/// closed curves). Throws PreconditionError on a zero-length segment.
std::vector<CurveCrossing> self_intersections(const CurveImmersion& curve,
                                              double eps = kIntersectionEps,
                                              int window = kAdjacencyWindow);

struct EmbeddedTime {
  double t_emb = 0.0;
  double t_below = 0.0;  // last time known to intersect
  double t_above = 0.0;  // first time known to be embedded
  std::size_t count_below = 0;
  std::size_t count_above = 0;
};

/// Bisection on the flow time for the indicator "no self-intersections".
/// Returns t_emb = 0 when the curve is already embedded. Throws
/// NumericalError("not embedded by t_max") otherwise when the flowed curve at
/// t_max still intersects.
EmbeddedTime first_embedded_time(const CurveImmersion& curve, double t_max, double tol = 1e-3,
                                 double eps = kIntersectionEps);

}  // namespace horo
