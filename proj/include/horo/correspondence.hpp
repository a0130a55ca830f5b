#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "horo/conformal.hpp"
#include "horo/minkowski.hpp"

namespace horo {

/// Canonical: principal curvatures kappa < 1 (horospherically convex side).
/// Opposite: the reversed normal, kappa_opp = -kappa_can.
enum class Orientation { canonical, opposite };

enum class Conversion { lambda_to_kappa, kappa_to_lambda };

/// One point of the hypersurface built from a conformal metric: position phi on
/// H^{n+1}, unit normal eta on de Sitter space, light-cone point psi = phi + eta,
/// and (when a frame was requested) coordinate tangents with both fundamental
/// forms.
struct HypersurfacePoint {
  MinkVector phi;
  MinkVector eta;
  MinkVector psi;
  std::vector<MinkVector> tangents;
  std::vector<MinkVector> eta_tangents;
  Eigen::MatrixXd first_form;
  Eigen::MatrixXd second_form;
  Eigen::VectorXd u;
  double t = 0.0;
};

/// Sorted principal curvatures.
struct CurvatureSpectrum {
  Eigen::VectorXd values;
  Orientation orientation = Orientation::canonical;
};

/// Horospherical support function and Gauss map point: psi = e^{rho_tilde}(1, G).
struct SupportData {
  double rho_tilde = 0.0;
  Eigen::VectorXd gauss_point;
};

struct ImmerseOptions {
  // Reject points where lambda_max e^{-2t} >= 1/2 - margin.
  bool enforce_scale_bound = true;
  double margin = 1e-3;
};

/// Representation formula: with rho_eff = rho + scale_offset + t,
///   phi = (e^{rho_eff}/2)(1 + e^{-2 rho_eff}(1 + |grad rho|^2))(1, x)
///         + e^{-rho_eff}(0, -x + grad rho),
///   psi = e^{rho_eff}(1, x),  eta = psi - phi,
/// where x = chart.embed(u) and grad rho is the round-sphere gradient pushed to
/// the ambient tangent space at x. Throws NumericalError("not immersed at this
/// scale") when the scale bound is enforced and fails.
HypersurfacePoint immerse(const ConformalMetric& metric, const Eigen::VectorXd& u, double t,
                          const ImmerseOptions& options = {});

/// immerse() plus coordinate tangents d_i phi and d_i eta (central differences
/// with the field's step), I_ij = <d_i phi, d_j phi> and II_ij = -<d_i eta, d_j phi>
/// (symmetrized). The scale bound is not enforced here; degeneracy is read off
/// the first fundamental form instead.
HypersurfacePoint immerse_with_frame(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                     double t);

/// Principal curvatures (canonical orientation) from det(II - kappa I) = 0.
/// Throws NumericalError("not an immersion") when I is singular and
/// NumericalError when II is not symmetric within tolerance.
CurvatureSpectrum extrinsic_curvatures(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                       double t);

/// Same as extrinsic_curvatures on a point that already carries its frame.
CurvatureSpectrum curvatures_from_frame(const HypersurfacePoint& point);

/// Canonical: lambda = 1/2 - 1/(1 - kappa)  <=>  kappa = 1 - 2/(1 - 2 lambda).
/// Opposite:  2 lambda = (kappa - 1)/(kappa + 1)  <=>  kappa = (1 + 2 lambda)/(1 - 2 lambda).
double lambda_kappa(double value, Orientation orientation, Conversion direction);

/// Principal curvature after flowing time t along the normal:
/// (kappa - tanh t)/(1 - kappa tanh t).
double ricatti(double kappa, double t);

/// (cosh t - kappa sinh t)^2, the factor of the first fundamental form along
/// the flow in a principal frame.
double flow_metric_factor(double kappa, double t);

/// g_r = g_hat - r^2 Sch + (r^4/4) Q with Q_ij = g_hat^{kl} Sch_ik Sch_jl, in
/// chart coordinates.
Eigen::MatrixXd fg_metric(const ConformalMetric& metric, const Eigen::VectorXd& u, double r);

/// Eigenvalues of g_r relative to g_hat, ascending.
Eigen::VectorXd fg_relative_eigenvalues(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                        double r);

/// lambda - r^2 lambda^2 / 2.
double compactified_sectional(double lambda, double r);

/// Requires psi on the future null cone.
SupportData support_and_gauss(const MinkVector& psi, double tol = kHyperquadricTol);
SupportData support_and_gauss(const HypersurfacePoint& point, double tol = kHyperquadricTol);

/// Smallest t >= 0 with lambda_max e^{-2t} <= 1/2 - margin over the samples.
double min_immersion_time(const ConformalMetric& metric, std::span<const Eigen::VectorXd> samples,
                          double margin);

}  // namespace horo
