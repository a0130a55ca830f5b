#include "horo/gallery.hpp"

#include <algorithm>
#include <cmath>

#include "horo/error.hpp"

namespace horo {
namespace {

struct AlphaProfile {
  double r, R, dr, dR;
};

AlphaProfile alpha_profile(double u) {
  AlphaProfile p;
  p.r = std::sin(0.5 * u) * std::cos(u);
  p.R = std::cos(0.5 * u) - std::cos(1.5 * u) / 3.0;
  p.dr = 0.5 * std::cos(0.5 * u) * std::cos(u) - std::sin(0.5 * u) * std::sin(u);
  p.dR = -0.5 * std::sin(0.5 * u) + 0.5 * std::sin(1.5 * u);
  return p;
}

// Unit normal in H^2 along alpha: the Lorentz cross product J(alpha x alpha'),
// negated so that the curvature stays below 1 (horospherically convex side).
MinkVector alpha_normal(double u) {
  const Eigen::Vector3d a = alpha_point(u).coords();
  const Eigen::Vector3d v = alpha_velocity(u).coords();
  Eigen::Vector3d n = a.cross(v);
  n(0) = -n(0);
  const MinkVector m(n);
  return (-1.0 / std::sqrt(mink_inner(m, m))) * m;
}

ConformalMetric band_metric(std::function<double(double)> f, std::function<double(double)> df,
                            std::function<double(double)> d2f, double half_width) {
  return ConformalMetric{Chart::band(2),
                         ScalarField::band_profile(std::move(f), std::move(df), std::move(d2f),
                                                   half_width)};
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"geodesic-sphere", "round-degenerate", "incomplete-band",
          "cylinder-delaunay", "alpha-curve", "alpha-product"};
}

std::vector<Eigen::VectorXd> sample_points(const GalleryEntry& entry, int count, double fraction) {
  if (!entry.metric) throw PreconditionError("sample_points: entry has no metric payload");
  if (count < 1) throw PreconditionError("sample_points: count must be positive");
  const int side = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count)))));
  auto grid = [side](int k, double lo, double hi) {
    return side == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (side - 1);
  };
  std::vector<Eigen::VectorXd> out;
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      Eigen::VectorXd u(2);
      if (entry.band_half_width > 0.0) {
        const double edge = fraction * entry.band_half_width;
        u << grid(a, -edge, edge), -std::numbers::pi + 2.0 * std::numbers::pi * b / side;
      } else {
        u << grid(a, -2.0, 2.0), grid(b, -2.0, 2.0);
      }
      out.push_back(u);
    }
  }
  return out;
}

MinkVector alpha_point(double u) {
  const AlphaProfile p = alpha_profile(u);
  return MinkVector{std::cosh(p.r) * std::cosh(p.R), std::sinh(p.r) * std::cosh(p.R),
                    std::sinh(p.R)};
}

MinkVector alpha_velocity(double u) {
  const AlphaProfile p = alpha_profile(u);
  const double cr = std::cosh(p.r), sr = std::sinh(p.r);
  const double cR = std::cosh(p.R), sR = std::sinh(p.R);
  return MinkVector{sr * cR * p.dr + cr * sR * p.dR, cr * cR * p.dr + sr * sR * p.dR, cR * p.dR};
}

CurveImmersion alpha_curve(int resolution) {
  CurveImmersion c;
  c.phi0 = &alpha_point;
  c.eta0 = &alpha_normal;
  c.period = 4.0 * std::numbers::pi;
  c.resolution = resolution;
  return c;
}

GalleryEntry make_example(const std::string& name, const GalleryParams& params) {
  GalleryEntry e;
  e.name = name == "alpha" ? "alpha-curve" : name;
  e.params = params;

  if (e.name == "geodesic-sphere") {
    if (params.rho0 == 0.0) throw PreconditionError("geodesic-sphere: rho0 must be nonzero");
    e.metric = ConformalMetric{Chart::stereographic(2), ScalarField::constant(params.rho0)};
    e.description = "constant conformal factor rho0; geodesic sphere of radius rho0";
  } else if (e.name == "round-degenerate") {
    e.metric = ConformalMetric{Chart::stereographic(2), ScalarField::constant(0.0)};
    e.description = "round metric (rho = 0); the representation formula collapses to a point";
  } else if (e.name == "incomplete-band") {
    e.metric = band_metric([](double s) { return -0.5 * std::log(1.0 - s * s); },
                           [](double s) { return s / (1.0 - s * s); },
                           [](double s) {
                             const double d = 1.0 - s * s;
                             return (1.0 + s * s) / (d * d);
                           },
                           1.0);
    e.default_t = 0.5;
    e.band_half_width = 1.0;
    e.description = "rho = -1/2 log(1 - s^2) on the band |s| < 1";
  } else if (e.name == "cylinder-delaunay") {
    if (!(params.cylinder_t > 0.0)) throw PreconditionError("cylinder-delaunay: t must be positive");
    e.metric = band_metric([](double s) { return -std::log(std::cos(s)); },
                           [](double s) { return std::tan(s); },
                           [](double s) { return 1.0 / (std::cos(s) * std::cos(s)); },
                           0.5 * std::numbers::pi);
    e.metric->scale_offset = params.cylinder_t;
    e.band_half_width = 0.5 * std::numbers::pi;
    e.description = "rho = t - log cos s on S^2 minus two poles (flat cylinder)";
  } else if (e.name == "alpha-curve") {
    if (params.resolution < 3) throw PreconditionError("alpha-curve: resolution must be >= 3");
    e.kind = PayloadKind::curve;
    e.curve = alpha_curve(params.resolution);
    e.description = "closed curve in H^2 with a three-sheeted Gauss map";
  } else if (e.name == "alpha-product") {
    if (params.mesh_u < 3 || params.mesh_v < 1 || !(params.mesh_half_length > 0.0)) {
      throw PreconditionError("alpha-product: invalid mesh parameters");
    }
    e.kind = PayloadKind::mesh;
    e.curve = alpha_curve(params.resolution);
    e.mesh = curve_product_mesh(*e.curve, params.mesh_u, params.mesh_v, params.mesh_half_length);
    e.description = "alpha-curve times a boost family in H^3";
  } else {
    throw PreconditionError("unknown example: " + name);
  }
  return e;
}

}  // namespace horo
