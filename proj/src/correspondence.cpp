#include "horo/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "horo/error.hpp"
#include "horo/linalg.hpp"

namespace horo {
namespace {

// Relative size of the smallest eigenvalue of I below which the map is treated
// as collapsed.
constexpr double kDegenerateForm = 1e-10;
constexpr double kSymmetryTol = 1e-4;

HypersurfacePoint assemble(const ConformalMetric& metric, const Eigen::VectorXd& u, double t,
                           const Derivatives& d) {
  const Eigen::VectorXd x = metric.chart.embed(u);
  const Eigen::VectorXd grad = metric.chart.jacobian(u) * (d.pack.inverse * d.gradient);
  const double r = d.value + metric.scale_offset + t;
  const double e = std::exp(r);
  const double radial = 0.5 * e * (1.0 + std::exp(-2.0 * r) * (1.0 + d.grad_norm_sq));

  const MinkVector light = MinkVector::from_parts(1.0, x);
  HypersurfacePoint p;
  p.u = u;
  p.t = t;
  p.phi = radial * light + std::exp(-r) * MinkVector::from_parts(0.0, grad - x);
  p.psi = e * light;
  p.eta = p.psi - p.phi;
  return p;
}

}  // namespace

HypersurfacePoint immerse(const ConformalMetric& metric, const Eigen::VectorXd& u, double t,
                          const ImmerseOptions& options) {
  if (options.enforce_scale_bound) {
    const auto sch = schouten(metric, u);
    if (sch.eigenvalues.maxCoeff() * std::exp(-2.0 * t) >= 0.5 - options.margin) {
      throw NumericalError("not immersed at this scale");
    }
  }
  return assemble(metric, u, t, metric.derivatives(u));
}

HypersurfacePoint immerse_with_frame(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                     double t) {
  const ImmerseOptions raw{.enforce_scale_bound = false};
  HypersurfacePoint p = immerse(metric, u, t, raw);
  const auto n = u.size();
  const double h = metric.rho.step();

  std::vector<MinkVector>& deta = p.eta_tangents;
  deta.resize(n);
  p.tangents.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd up = u, um = u;
    up(i) += h;
    um(i) -= h;
    const HypersurfacePoint a = immerse(metric, up, t, raw);
    const HypersurfacePoint b = immerse(metric, um, t, raw);
    p.tangents[i] = (1.0 / (2.0 * h)) * (a.phi - b.phi);
    deta[i] = (1.0 / (2.0 * h)) * (a.eta - b.eta);
  }

  p.first_form.resize(n, n);
  Eigen::MatrixXd raw_second(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      p.first_form(i, j) = mink_inner(p.tangents[i], p.tangents[j]);
      raw_second(i, j) = -mink_inner(deta[i], p.tangents[j]);
    }
  }
  p.first_form = 0.5 * (p.first_form + p.first_form.transpose());
  const double scale = std::max(raw_second.cwiseAbs().maxCoeff(), p.first_form.cwiseAbs().maxCoeff());
  if (asymmetry(raw_second) > kSymmetryTol * std::max(scale, 1e-300)) {
    throw NumericalError("second fundamental form is not symmetric within tolerance");
  }
  p.second_form = 0.5 * (raw_second + raw_second.transpose());
  return p;
}

CurvatureSpectrum curvatures_from_frame(const HypersurfacePoint& point) {
  const Eigen::MatrixXd& first = point.first_form;
  if (first.size() == 0) throw PreconditionError("curvatures_from_frame: point has no frame");
  const Eigen::VectorXd metric_eigs = symmetric_eigenvalues(first);
  const double top = std::max(metric_eigs.cwiseAbs().maxCoeff(), 1.0);
  if (!(metric_eigs(0) > kDegenerateForm * top)) throw NumericalError("not an immersion");
  return {generalized_eigenvalues(point.second_form, first), Orientation::canonical};
}

CurvatureSpectrum extrinsic_curvatures(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                       double t) {
  return curvatures_from_frame(immerse_with_frame(metric, u, t));
}

double lambda_kappa(double value, Orientation orientation, Conversion direction) {
  if (direction == Conversion::lambda_to_kappa) {
    if (!(value < 0.5)) throw PreconditionError("lambda_kappa: lambda must be < 1/2");
    const double k = orientation == Orientation::canonical ? 1.0 - 2.0 / (1.0 - 2.0 * value)
                                                           : (1.0 + 2.0 * value) / (1.0 - 2.0 * value);
    return k;
  }
  if (orientation == Orientation::canonical) {
    if (value == 1.0) throw PreconditionError("lambda_kappa: kappa = 1 is excluded (canonical)");
    return 0.5 - 1.0 / (1.0 - value);
  }
  if (!(value > -1.0)) throw PreconditionError("lambda_kappa: kappa must be > -1 (opposite)");
  return 0.5 * (value - 1.0) / (value + 1.0);
}

double ricatti(double kappa, double t) {
  const double th = std::tanh(t);
  const double denom = 1.0 - kappa * th;
  if (denom == 0.0) throw PreconditionError("ricatti: pole 1 - kappa tanh t = 0");
  return (kappa - th) / denom;
}

double flow_metric_factor(double kappa, double t) {
  const double f = std::cosh(t) - kappa * std::sinh(t);
  return f * f;
}

Eigen::MatrixXd fg_metric(const ConformalMetric& metric, const Eigen::VectorXd& u, double r) {
  if (!(r >= 0.0)) throw PreconditionError("fg_metric: r must be nonnegative");
  const SchoutenReport sch = schouten(metric, u);
  const Eigen::MatrixXd g =
      std::exp(2.0 * metric.effective_rho(u)) * metric.chart.metric(u);
  const Eigen::MatrixXd q = sch.tensor * g.inverse() * sch.tensor;
  return g - r * r * sch.tensor + 0.25 * std::pow(r, 4) * q;
}

Eigen::VectorXd fg_relative_eigenvalues(const ConformalMetric& metric, const Eigen::VectorXd& u,
                                        double r) {
  const Eigen::MatrixXd g =
      std::exp(2.0 * metric.effective_rho(u)) * metric.chart.metric(u);
  return generalized_eigenvalues(fg_metric(metric, u, r), g);
}

double compactified_sectional(double lambda, double r) {
  return lambda - 0.5 * r * r * lambda * lambda;
}

SupportData support_and_gauss(const MinkVector& psi, double tol) {
  if (!(psi.time() > 0.0)) throw PreconditionError("support_and_gauss: psi_0 must be positive");
  if (!on_null_cone(psi, tol)) throw PreconditionError("support_and_gauss: psi is not null");
  return {std::log(psi.time()), psi.spatial() / psi.time()};
}

SupportData support_and_gauss(const HypersurfacePoint& point, double tol) {
  return support_and_gauss(point.psi, tol);
}

double min_immersion_time(const ConformalMetric& metric, std::span<const Eigen::VectorXd> samples,
                          double margin) {
  if (samples.empty()) throw PreconditionError("min_immersion_time: empty sample set");
  double lambda_max = -std::numeric_limits<double>::infinity();
  for (const auto& u : samples) {
    lambda_max = std::max(lambda_max, schouten(metric, u).eigenvalues.maxCoeff());
  }
  return immersion_time_for(lambda_max, margin);
}

}  // namespace horo
