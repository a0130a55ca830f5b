#include "horo/curves.hpp"

#include <cmath>
#include <numbers>

#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/kernels.hpp"

namespace horo {

MinkVector CurveImmersion::phi(double u) const {
  if (t == 0.0) return phi0(u);
  return std::cosh(t) * phi0(u) + std::sinh(t) * eta0(u);
}

MinkVector CurveImmersion::eta(double u) const {
  if (t == 0.0) return eta0(u);
  return std::sinh(t) * phi0(u) + std::cosh(t) * eta0(u);
}

CurveImmersion CurveImmersion::flowed(double dt) const {
  CurveImmersion c = *this;
  c.t += dt;
  return c;
}

CurveImmersion CurveImmersion::with_resolution(int m) const {
  if (m < 3) throw PreconditionError("curve resolution must be at least 3");
  CurveImmersion c = *this;
  c.resolution = m;
  return c;
}

std::vector<double> CurveImmersion::parameters() const {
  const int count = closed ? resolution : resolution + 1;
  std::vector<double> u(count);
  for (int i = 0; i < count; ++i) u[i] = period * i / resolution;
  return u;
}

CurveImmersion geodesic_circle(double radius, int resolution) {
  if (!(radius > 0.0)) throw PreconditionError("geodesic_circle: radius must be positive");
  CurveImmersion c;
  const double ch = std::cosh(radius), sh = std::sinh(radius);
  c.phi0 = [ch, sh](double u) { return MinkVector{ch, sh * std::cos(u), sh * std::sin(u)}; };
  c.eta0 = [ch, sh](double u) { return MinkVector{sh, ch * std::cos(u), ch * std::sin(u)}; };
  c.period = 2.0 * std::numbers::pi;
  c.resolution = resolution;
  return c;
}

double curve_curvature(const CurveImmersion& curve, double u, double h) {
  const MinkVector dphi = (0.5 / h) * (curve.phi(u + h) - curve.phi(u - h));
  const MinkVector deta = (0.5 / h) * (curve.eta(u + h) - curve.eta(u - h));
  return -mink_inner(deta, dphi) / mink_inner(dphi, dphi);
}

std::vector<double> curve_curvatures(const CurveImmersion& curve, double h) {
  std::vector<double> out;
  for (double u : curve.parameters()) out.push_back(curve_curvature(curve, u, h));
  return out;
}

int gauss_winding(const CurveImmersion& curve) {
  if (!curve.closed) throw PreconditionError("gauss_winding: curve is not closed");
  const MinkVector gap = curve.phi(curve.period) - curve.phi(0.0);
  if (gap.coords().norm() > 1e-8 * std::max(1.0, curve.phi(0.0).coords().norm())) {
    throw PreconditionError("gauss_winding: curve does not close up over its period");
  }

  const auto us = curve.parameters();
  auto angle = [&](double u) {
    const SupportData s = support_and_gauss(curve.phi(u) + curve.eta(u), 1e-8);
    return std::atan2(s.gauss_point(1), s.gauss_point(0));
  };
  const double first = angle(us.front());
  double prev = first;
  double total = 0.0;
  for (std::size_t i = 1; i <= us.size(); ++i) {
    const double a = i < us.size() ? angle(us[i]) : first;
    double d = std::remainder(a - prev, 2.0 * std::numbers::pi);
    if (std::abs(d) >= std::numbers::pi) {
      throw NumericalError("gauss_winding: Gauss angle jump >= pi; resolution too coarse");
    }
    total += d;
    prev = a;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

std::vector<Eigen::Vector2d> curve_ball_points(const CurveImmersion& curve) {
  std::vector<Eigen::Vector2d> pts;
  const auto us = curve.parameters();
  pts.reserve(us.size());
  for (double u : us) {
    const MinkVector p = curve.phi(u);
    pts.emplace_back(p[1] / (1.0 + p[0]), p[2] / (1.0 + p[0]));
  }
  return pts;
}

std::vector<CurveCrossing> self_intersections(const CurveImmersion& curve, double eps, int window) {
  if (!(eps > 0.0)) throw PreconditionError("self_intersections: eps must be positive");
  const auto us = curve.parameters();
  const IndexPairs pairs = omp::segment_crossings(curve_ball_points(curve), curve.closed, window, eps);
  std::vector<CurveCrossing> out;
  out.reserve(pairs.size());
  for (const auto& [i, j] : pairs) out.push_back({i, j, us[i], us[j]});
  return out;
}

EmbeddedTime first_embedded_time(const CurveImmersion& curve, double t_max, double tol,
                                 double eps) {
  if (!(t_max >= 0.0) || !(tol > 0.0)) {
    throw PreconditionError("first_embedded_time: need t_max >= 0 and tol > 0");
  }
  auto count = [&](double t) { return self_intersections(curve.flowed(t), eps).size(); };

  EmbeddedTime r;
  const std::size_t c0 = count(0.0);
  if (c0 == 0) return r;
  const std::size_t cmax = count(t_max);
  if (cmax != 0) throw NumericalError("not embedded by t_max");

  double lo = 0.0, hi = t_max;
  std::size_t clo = c0, chi = cmax;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t c = count(mid);
    if (c == 0) {
      hi = mid;
      chi = c;
    } else {
      lo = mid;
      clo = c;
    }
  }
  r.t_emb = hi;
  r.t_below = lo;
  r.t_above = hi;
  r.count_below = clo;
  r.count_above = chi;
  return r;
}

}  // namespace horo
