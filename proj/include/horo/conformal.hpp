#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "horo/sphere.hpp"

namespace horo {

/// g_hat = e^{2(rho + scale_offset)} g_{S^n} on the domain of `rho` inside the
/// chart.
struct ConformalMetric {
  Chart chart;
  ScalarField rho;
  double scale_offset = 0.0;
  JetMode jets = JetMode::automatic;

  double effective_rho(const Eigen::VectorXd& u) const { return rho(u) + scale_offset; }
  Derivatives derivatives(const Eigen::VectorXd& u) const {
    return gradient_hessian(rho, chart, u, jets);
  }
};

/// Schouten tensor of g_hat at one chart point.
///
/// `tensor` is  1/2 g - rho_{i,j} + rho_i rho_j - 1/2 |grad rho|^2 g  in chart
/// coordinates (lower indices); for n >= 3 this is the classical Schouten
/// tensor of g_hat, and it is used as the definition for n = 2 as well.
/// `conformal_part` is the same expression without the 1/2 g term of the round
/// sphere. `eigenvalues` are those of g_hat^{-1} tensor, ascending.
struct SchoutenReport {
  Eigen::MatrixXd tensor;
  Eigen::MatrixXd conformal_part;
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd u;
};

SchoutenReport schouten(const ConformalMetric& metric, const Eigen::VectorXd& u);

/// Sectional curvature of the horospherical metric on the principal plane
/// (e_i, e_j) and the i-th Schouten eigenvalue, from principal curvatures.
struct HorosphericalCurvature {
  double sectional;
  double schouten_i;
};

HorosphericalCurvature horospherical_curvature(double kappa_i, double kappa_j);

/// Scalar curvature sum_{i != j} K(kappa_i, kappa_j) of the horospherical
/// metric.
double horospherical_scalar_curvature(std::span<const double> kappas);

/// e^{2 rho_eff} + |grad rho|^2.
double beta(const ConformalMetric& metric, const Eigen::VectorXd& u);

/// A path tau -> u(tau), tau in [0, 1], in chart coordinates. The velocity is
/// optional; when absent it is differenced.
struct ChartPath {
  std::function<Eigen::VectorXd(double)> position;
  std::function<Eigen::VectorXd(double)> velocity;
};

struct PathLength {
  double value = 0.0;
  bool infinite = false;
  int levels = 0;
  double error_estimate = 0.0;
};

inline constexpr double kDivergenceCap = 1e6;

/// Length of the path in g_hat by double-exponential (tanh-sinh) quadrature.
/// The endpoints may sit on the domain boundary; quadrature nodes never touch
/// them. A level sum above kDivergenceCap that is still growing is reported as
/// infinite. Throws PreconditionError if an interior node leaves the domain.
PathLength path_length(const ConformalMetric& metric, const ChartPath& path, int max_levels = 12);

/// Same metric with scale_offset increased by dt; Schouten eigenvalues scale by
/// e^{-2 dt}.
ConformalMetric rescale(const ConformalMetric& metric, double dt);

inline constexpr double kRealizableMargin = 1e-3;
inline constexpr double kRealizableBound = 1e6;

struct RealizabilityReport {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool bounded_below = true;
  bool bounded_above = true;
  bool realizable = false;
  double suggested_t0 = 0.0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::vector<std::string> flags;
};

/// Aggregates Schouten eigenvalue extremes over the samples. Samples where
/// derivatives cannot be taken are skipped and counted; if none survive, or the
/// set is empty, PreconditionError.
RealizabilityReport realizability_report(const ConformalMetric& metric,
                                         std::span<const Eigen::VectorXd> samples,
                                         double margin = kRealizableMargin,
                                         double bound = kRealizableBound);

/// max(0, 1/2 log(lambda_max^+ / (1/2 - margin))).
double immersion_time_for(double lambda_max, double margin);

}  // namespace horo
