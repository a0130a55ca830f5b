#include "horo/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "horo/error.hpp"
#include "horo/linalg.hpp"

namespace horo {

SchoutenReport schouten(const ConformalMetric& metric, const Eigen::VectorXd& u) {
  const Derivatives d = metric.derivatives(u);
  const Eigen::MatrixXd& g = d.pack.metric;

  SchoutenReport r;
  r.u = u;
  r.conformal_part = -d.covariant_hessian + d.gradient * d.gradient.transpose() -
                     0.5 * d.grad_norm_sq * g;
  r.conformal_part = 0.5 * (r.conformal_part + r.conformal_part.transpose());
  r.tensor = 0.5 * g + r.conformal_part;
  const double weight = std::exp(-2.0 * (d.value + metric.scale_offset));
  r.eigenvalues = weight * generalized_eigenvalues(r.tensor, g);
  return r;
}

HorosphericalCurvature horospherical_curvature(double kappa_i, double kappa_j) {
  if (kappa_i == 1.0 || kappa_j == 1.0) {
    throw PreconditionError("horospherical_curvature: kappa = 1 is the horospherical convexity boundary");
  }
  const double a = 1.0 / (1.0 - kappa_i);
  const double b = 1.0 / (1.0 - kappa_j);
  return {1.0 - a - b, 0.5 - a};
}

double horospherical_scalar_curvature(std::span<const double> kappas) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    for (std::size_t j = 0; j < kappas.size(); ++j) {
      if (i != j) sum += horospherical_curvature(kappas[i], kappas[j]).sectional;
    }
  }
  return sum;
}

double beta(const ConformalMetric& metric, const Eigen::VectorXd& u) {
  const Derivatives d = metric.derivatives(u);
  return std::exp(2.0 * (d.value + metric.scale_offset)) + d.grad_norm_sq;
}

namespace {

struct Node {
  double tau;
  double weight;
};

// Abscissa and weight of the tanh-sinh rule on [0, 1] at x. The abscissa is
// computed from the nearer endpoint so that nodes next to it stay distinct.
Node tanh_sinh_node(double x) {
  const double e = std::exp(std::numbers::pi * std::sinh(std::abs(x)));
  const double gap = 1.0 / (1.0 + e);  // distance to the nearer endpoint
  const double tau = x >= 0.0 ? 1.0 - gap : gap;
  const double c = std::cosh(0.5 * std::numbers::pi * std::sinh(x));
  const double w = 0.25 * std::numbers::pi * std::cosh(x) / (c * c);
  return {tau, w};
}

}  // namespace

PathLength path_length(const ConformalMetric& metric, const ChartPath& path, int max_levels) {
  if (!path.position) throw PreconditionError("path_length: path position is required");

  auto speed = [&](double tau) {
    Eigen::VectorXd v;
    if (path.velocity) {
      v = path.velocity(tau);
    } else {
      const double dt = 1e-6;
      v = (path.position(tau + dt) - path.position(tau - dt)) / (2.0 * dt);
    }
    return std::sqrt(v.dot(metric.chart.metric(path.position(tau)) * v));
  };

  // Integrand at tau, or nullopt when tau rounds onto an endpoint that lies
  // outside the domain.
  auto integrand = [&](double tau) -> std::optional<double> {
    const Eigen::VectorXd u = path.position(tau);
    if (!metric.chart.in_range(u) || !metric.rho.contains(u)) {
      if (std::min(tau, 1.0 - tau) < 1e-10) return std::nullopt;
      throw PreconditionError("path_length: path exits the domain interior");
    }
    const double value = std::exp(metric.effective_rho(u)) * speed(tau);
    if (!std::isfinite(value)) return std::nullopt;
    return value;
  };

  // x range where the node gap is still resolvable in double precision.
  constexpr double kXMax = 3.2;
  PathLength out;
  double h = 0.5;
  double sum = 0.0;
  for (int k = static_cast<int>(-kXMax / h); k <= static_cast<int>(kXMax / h); ++k) {
    const Node node = tanh_sinh_node(k * h);
    if (auto f = integrand(node.tau)) sum += node.weight * *f;
  }
  double estimate = sum * h;
  double previous = estimate;
  int growing = 0;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (int k = 1; k * h <= kXMax; k += 2) {
      for (double x : {k * h, -k * h}) {
        const Node node = tanh_sinh_node(x);
        if (auto f = integrand(node.tau)) sum += node.weight * *f;
      }
    }
    estimate = sum * h;
    out.levels = level;
    out.error_estimate = std::abs(estimate - previous);
    growing = estimate > previous ? growing + 1 : 0;
    if (estimate > kDivergenceCap && growing >= 2) {
      out.value = std::numeric_limits<double>::infinity();
      out.infinite = true;
      return out;
    }
    if (level >= 4 && out.error_estimate <= 1e-12 * std::max(1.0, std::abs(estimate))) break;
    previous = estimate;
  }
  out.value = estimate;
  if (estimate > kDivergenceCap) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
  }
  return out;
}

ConformalMetric rescale(const ConformalMetric& metric, double dt) {
  ConformalMetric out = metric;
  out.scale_offset += dt;
  return out;
}

double immersion_time_for(double lambda_max, double margin) {
  if (!(margin > 0.0 && margin < 0.5)) {
    throw PreconditionError("immersion time: margin must lie in (0, 1/2)");
  }
  const double positive = std::max(lambda_max, std::numeric_limits<double>::min());
  return std::max(0.0, 0.5 * std::log(positive / (0.5 - margin)));
}

RealizabilityReport realizability_report(const ConformalMetric& metric,
                                         std::span<const Eigen::VectorXd> samples,
                                         double margin, double bound) {
  if (samples.empty()) throw PreconditionError("realizability_report: empty sample set");
  RealizabilityReport r;
  r.lambda_min = std::numeric_limits<double>::infinity();
  r.lambda_max = -std::numeric_limits<double>::infinity();
  for (const auto& u : samples) {
    try {
      const auto rep = schouten(metric, u);
      r.lambda_min = std::min(r.lambda_min, rep.eigenvalues.minCoeff());
      r.lambda_max = std::max(r.lambda_max, rep.eigenvalues.maxCoeff());
      ++r.samples;
    } catch (const PreconditionError&) {
      ++r.skipped;
    }
  }
  if (r.samples == 0) throw PreconditionError("realizability_report: no usable samples");

  r.bounded_below = r.lambda_min >= -bound;
  r.bounded_above = r.lambda_max <= bound;
  r.realizable = r.bounded_below && r.lambda_max <= 0.5 - margin;
  if (!r.bounded_below) r.flags.emplace_back("Schouten not bounded from below");
  if (!r.bounded_above) r.flags.emplace_back("Schouten not bounded from above");
  if (r.lambda_max > 0.5 - margin) {
    r.flags.emplace_back("eigenvalues reach 1/2 - margin; immersion needs a rescale");
  }
  if (r.bounded_above) r.suggested_t0 = immersion_time_for(r.lambda_max, std::min(margin, 0.499));
  return r;
}

}  // namespace horo
