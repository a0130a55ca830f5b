#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horo/error.hpp"
#include "horo/minkowski.hpp"

using namespace horo;

namespace {

// Point at hyperbolic distance d from (1, 0, ..., 0) in direction e_1.
MinkVector radial(double d, int dim) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
  x(0) = std::cosh(d);
  x(1) = std::sinh(d);
  return MinkVector(x);
}

}  // namespace

TEST_CASE("inner product has signature (-, +, +, +)") {
  const MinkVector a{1.0, 2.0, 3.0, 4.0};
  const MinkVector b{5.0, 6.0, 7.0, 8.0};
  CHECK(mink_inner(a, b) == doctest::Approx(-5.0 + 12.0 + 21.0 + 32.0));
  CHECK(mink_inner(MinkVector{1.0, 0.0, 0.0}, MinkVector{1.0, 0.0, 0.0}) == -1.0);
}

TEST_CASE("hyperquadric membership") {
  CHECK(on_hyperboloid(radial(1.3, 3)));
  CHECK_FALSE(on_hyperboloid(MinkVector{-1.0, 0.0, 0.0}));  // past sheet
  CHECK(on_null_cone(MinkVector{2.0, 2.0, 0.0}));
  CHECK(on_de_sitter(MinkVector{0.0, 0.6, 0.8}));
  // |<v,v> - target| relative to max(1, |v|^2): |-3 + 1| / 5.
  CHECK(hyperquadric_residual(MinkVector{2.0, 1.0, 0.0}, -1.0) == doctest::Approx(0.4));
}

TEST_CASE("Poincare ball radius is tanh(d/2)") {
  for (double d : {0.0, 0.1, 0.346574, 1.0, 4.0}) {
    const BallPoint b = to_poincare_ball(radial(d, 3));
    CHECK(b.coords().norm() == doctest::Approx(std::tanh(d / 2)).epsilon(1e-14));
  }
}

TEST_CASE("ball round trip") {
  const BallPoint b(Eigen::Vector3d(0.1, -0.4, 0.3));
  const MinkVector x = from_poincare_ball(b);
  CHECK(on_hyperboloid(x));
  CHECK((to_poincare_ball(x).coords() - b.coords()).norm() < 1e-14);
}

TEST_CASE("to_poincare_ball rejects points off the hyperboloid") {
  CHECK_THROWS_AS(to_poincare_ball(MinkVector{1.0, 1.0, 0.0}), PreconditionError);
}

TEST_CASE("geodesic point sits at distance |t|") {
  const MinkVector phi = radial(0.7, 3);
  // Unit tangent at phi: (sinh, cosh, 0).
  const MinkVector eta{std::sinh(0.7), std::cosh(0.7), 0.0};
  for (double t : {-2.0, 0.0, 0.5, 3.0}) {
    const MinkVector q = geodesic_point(phi, eta, t);
    CHECK(on_hyperboloid(q));
    CHECK(-mink_inner(phi, q) == doctest::Approx(std::cosh(t)));
    CHECK(q[1] == doctest::Approx(std::sinh(0.7 + t)));
    const MinkVector d = geodesic_direction(phi, eta, t);
    CHECK(mink_inner(d, d) == doctest::Approx(1.0));
    CHECK(std::abs(mink_inner(d, q)) < 1e-12);
  }
}

TEST_CASE("geodesic_point validates the frame") {
  const MinkVector phi{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(geodesic_point(phi, MinkVector{1.0, 1.0, 0.0}, 1.0), PreconditionError);
}
