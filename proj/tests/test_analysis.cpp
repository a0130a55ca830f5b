#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "horo/boundary.hpp"
#include "horo/error.hpp"
#include "horo/gallery.hpp"

using namespace horo;

namespace {

// Brute-force oracle for polygon self-crossings: all segment pairs with
// cyclic index gap > window whose distance is below eps.
double seg_dist(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                const Eigen::Vector2d& d) {
  auto cross = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q) { return p.x() * q.y() - p.y() * q.x(); };
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) return 0.0;
  auto pt = [](const Eigen::Vector2d& p, const Eigen::Vector2d& s0, const Eigen::Vector2d& s1) {
    const Eigen::Vector2d v = s1 - s0;
    const double l = std::clamp((p - s0).dot(v) / v.squaredNorm(), 0.0, 1.0);
    return (s0 + l * v - p).norm();
  };
  return std::min({pt(a, c, d), pt(b, c, d), pt(c, a, b), pt(d, a, b)});
}

std::size_t brute_crossings(const std::vector<Eigen::Vector2d>& p, int window, double eps) {
  const int m = static_cast<int>(p.size());
  std::size_t count = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int gap = std::min(j - i, m - (j - i));
      if (gap <= window) continue;
      if (seg_dist(p[i], p[(i + 1) % m], p[j], p[(j + 1) % m]) < eps) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("gallery") {
  CHECK(gallery_names().size() == 6);
  CHECK(make_example("alpha").name == "alpha-curve");
  CHECK_THROWS_AS(make_example("nope"), PreconditionError);
  GalleryParams p;
  p.rho0 = 0.0;
  CHECK_THROWS_AS(make_example("geodesic-sphere", p), PreconditionError);
  p = {};
  p.cylinder_t = 0.0;
  CHECK_THROWS_AS(make_example("cylinder-delaunay", p), PreconditionError);
  const GalleryEntry product = make_example("alpha-product");
  REQUIRE(product.mesh);
  CHECK(product.mesh->vertices.size() == 512u * 9u);
}

TEST_CASE("geodesic circle") {
  const CurveImmersion c = geodesic_circle(1.2, 2048);
  CHECK(gauss_winding(c) == 1);
  CHECK(curve_curvature(c, 0.7) == doctest::Approx(-1.0 / std::tanh(1.2)).epsilon(1e-7));
  CHECK(self_intersections(c).empty());
  const auto pts = curve_ball_points(c);
  for (const auto& p : pts) CHECK(p.norm() == doctest::Approx(std::tanh(0.6)));
  CHECK(first_embedded_time(c, 1.0).t_emb == 0.0);
}

TEST_CASE("alpha-curve: degree three and horospherically convex") {
  const CurveImmersion a = alpha_curve(4096);
  CHECK(gauss_winding(a) == 3);
  CHECK(gauss_winding(a.with_resolution(8192)) == 3);
  const auto k = curve_curvatures(a);
  CHECK(*std::max_element(k.begin(), k.end()) < 1.0);
  // The flow keeps the degree.
  CHECK(gauss_winding(a.flowed(2.0)) == 3);
}

TEST_CASE("alpha-curve lies on H^2 with a unit normal") {
  const CurveImmersion a = alpha_curve();
  for (double u : {0.0, 1.0, 5.5, 11.0}) {
    const MinkVector phi = a.phi(u), eta = a.eta(u);
    CHECK(on_hyperboloid(phi));
    CHECK(mink_inner(eta, eta) == doctest::Approx(1.0));
    CHECK(std::abs(mink_inner(phi, eta)) < 1e-12);
    CHECK(std::abs(mink_inner(eta, alpha_velocity(u))) < 1e-12);
  }
}

TEST_CASE("flowed curve follows normal geodesics") {
  const CurveImmersion a = alpha_curve();
  const MinkVector moved = a.flowed(0.8).phi(2.0);
  const MinkVector expect = geodesic_point(a.phi(2.0), a.eta(2.0), 0.8);
  CHECK((moved.coords() - expect.coords()).norm() < 1e-12);
}

TEST_CASE("alpha-curve crossing count matches the brute-force oracle") {
  const CurveImmersion a = alpha_curve(16384);
  const std::size_t oracle = brute_crossings(curve_ball_points(a), kAdjacencyWindow, kIntersectionEps);
  CHECK(self_intersections(a).size() == oracle);
  // Frozen from the oracle (tangential self-contacts of the alpha profile).
  CHECK(oracle == 20);
}

TEST_CASE("embedding search") {
  CHECK_THROWS_WITH_AS(first_embedded_time(alpha_curve(2048), 1.0), doctest::Contains("not embedded"),
                       NumericalError);
  CurveImmersion open = geodesic_circle(1.0, 64);
  open.closed = false;
  CHECK_THROWS_AS(gauss_winding(open), PreconditionError);
}

TEST_CASE("meshes") {
  const GalleryEntry s = make_example("geodesic-sphere");
  const MeshImmersion m = mesh_metric_immersion(*s.metric, 0.0, 8, 16, 1.2);
  for (const auto& v : m.vertices) CHECK(v.coords().norm() == doctest::Approx(std::tanh(s.params.rho0 / 2)).epsilon(1e-12));
  CHECK(self_intersections(m).empty());

  const MeshImmersion tube = curve_product_mesh(geodesic_circle(1.0, 128), 64, 4, 0.5);
  CHECK(tube.vertices.size() == 64u * 5u);
  CHECK(tube.faces.size() == 2u * 64u * 4u);
  CHECK(self_intersections(tube).empty());
}

TEST_CASE("boundary at infinity") {
  CHECK(boundary_at_infinity(make_example("geodesic-sphere")).clusters.empty());
  const BoundaryReport cyl = boundary_at_infinity(make_example("cylinder-delaunay"));
  REQUIRE(cyl.clusters.size() == 2);
  for (const auto& c : cyl.clusters) CHECK(std::abs(c.center(2)) == doctest::Approx(1.0).epsilon(1e-3));
  const BoundaryReport band = boundary_at_infinity(make_example("incomplete-band"));
  CHECK(band.escaped > 0);
  for (const auto& c : band.clusters) {
    CHECK(std::abs(std::asin(c.center(2))) == doctest::Approx(1.0).epsilon(1e-2));
  }
  CHECK_THROWS_AS(boundary_at_infinity(make_example("alpha-curve")), PreconditionError);
}
