#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "horo/conformal.hpp"
#include "horo/error.hpp"
#include "horo/gallery.hpp"

using namespace horo;

namespace {

// rho of a Moebius transformation of S^2: the pullback of the round metric
// by a boost along e_2 is e^{2 rho} g with rho = -log(cosh a - sinh a x_2).
ConformalMetric moebius(double a) {
  const Chart c = Chart::stereographic(2);
  return {c, ScalarField::from_ambient(c, [a](const Eigen::VectorXd& x) {
            return -std::log(std::cosh(a) - std::sinh(a) * x(2));
          })};
}

}  // namespace

TEST_CASE("constant rho: Schouten is g/2 and eigenvalues are e^{-2 rho}/2") {
  const double r0 = 0.5 * std::log(2.0);
  const ConformalMetric m{Chart::stereographic(2), ScalarField::constant(r0)};
  const Eigen::Vector2d u(0.3, -1.2);
  const SchoutenReport s = schouten(m, u);
  CHECK((s.tensor - 0.5 * m.chart.metric(u)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(s.conformal_part.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(s.eigenvalues(0) == doctest::Approx(0.25));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.25));
}

TEST_CASE("Moebius pullback of the round metric has Schouten eigenvalues 1/2") {
  const ConformalMetric m = moebius(0.8);
  for (const Eigen::Vector2d u : {Eigen::Vector2d(0.1, 0.2), Eigen::Vector2d(-1.0, 0.7)}) {
    const SchoutenReport s = schouten(m, u);
    CHECK(s.eigenvalues(0) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(s.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-6));
  }
}

TEST_CASE("rescale divides the eigenvalues by e^{2 dt}") {
  const GalleryEntry band = make_example("incomplete-band");
  const Eigen::Vector2d u(0.4, 0.0);
  const Eigen::VectorXd base = schouten(*band.metric, u).eigenvalues;
  const Eigen::VectorXd scaled = schouten(rescale(*band.metric, 0.7), u).eigenvalues;
  CHECK((scaled - std::exp(-1.4) * base).norm() < 1e-12);
}

TEST_CASE("horospherical curvature of a sphere of radius r") {
  // kappa = -coth r: Schouten eigenvalue 1/2 - 1/(1 + coth r) and sectional
  // curvature twice that.
  const double r = 0.9, k = -1.0 / std::tanh(r);
  const HorosphericalCurvature h = horospherical_curvature(k, k);
  CHECK(h.schouten_i == doctest::Approx(0.5 - 1.0 / (1.0 + 1.0 / std::tanh(r))));
  CHECK(h.sectional == doctest::Approx(2 * h.schouten_i));
  const double ks[] = {k, k, k};
  CHECK(horospherical_scalar_curvature(ks) == doctest::Approx(6 * h.sectional));
  CHECK_THROWS_AS(horospherical_curvature(1.0, 0.0), PreconditionError);
}

TEST_CASE("beta of a constant factor") {
  const ConformalMetric m{Chart::stereographic(2), ScalarField::constant(0.3), 0.2};
  CHECK(beta(m, Eigen::Vector2d(0.5, 0.5)) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("path length: scaled equator and band meridian") {
  const ConformalMetric sphere{Chart::stereographic(2), ScalarField::constant(0.5 * std::log(2.0))};
  ChartPath equator;
  equator.position = [](double tau) {
    return Eigen::VectorXd(Eigen::Vector2d(std::cos(2 * std::numbers::pi * tau), std::sin(2 * std::numbers::pi * tau)));
  };
  const PathLength eq = path_length(sphere, equator);
  CHECK_FALSE(eq.infinite);
  CHECK(eq.value == doctest::Approx(2 * std::numbers::pi * std::sqrt(2.0)).epsilon(1e-7));

  // Meridian of the incomplete band: the integral of 1/sqrt(1 - s^2) over [0, 1).
  const GalleryEntry band = make_example("incomplete-band");
  ChartPath meridian;
  meridian.position = [](double tau) { return Eigen::VectorXd(Eigen::Vector2d(tau, 0.0)); };
  const PathLength len = path_length(*band.metric, meridian);
  CHECK_FALSE(len.infinite);
  CHECK(len.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-6));
}

TEST_CASE("path length reports divergence") {
  // rho = -log(1 - s): the meridian length is the integral of 1/(1-s)^2.
  const ConformalMetric m{Chart::band(2),
                          ScalarField::band_profile([](double s) { return -2 * std::log(1 - s * s); },
                                                    [](double s) { return 4 * s / (1 - s * s); },
                                                    [](double s) { return 4 * (1 + s * s) / std::pow(1 - s * s, 2); },
                                                    1.0)};
  ChartPath meridian;
  meridian.position = [](double tau) { return Eigen::VectorXd(Eigen::Vector2d(tau, 0.0)); };
  CHECK(path_length(m, meridian).infinite);
}

TEST_CASE("realizability") {
  const GalleryEntry sphere = make_example("geodesic-sphere");
  const auto pts = sample_points(sphere, 25);
  const RealizabilityReport ok = realizability_report(*sphere.metric, pts);
  CHECK(ok.realizable);
  CHECK(ok.lambda_max == doctest::Approx(0.25));
  CHECK(ok.suggested_t0 == 0.0);

  const GalleryEntry band = make_example("incomplete-band");
  std::vector<Eigen::VectorXd> edge;
  for (int k = 1; k <= 8; ++k) edge.push_back(Eigen::Vector2d(1 - std::pow(10.0, -k), 0.0));
  const RealizabilityReport bad = realizability_report(*band.metric, edge);
  CHECK_FALSE(bad.bounded_below);
  CHECK(std::find(bad.flags.begin(), bad.flags.end(), "Schouten not bounded from below") != bad.flags.end());

  CHECK_THROWS_AS(realizability_report(*band.metric, std::vector<Eigen::VectorXd>{}), PreconditionError);
}

TEST_CASE("immersion_time_for") {
  CHECK(immersion_time_for(0.25, 1e-3) == 0.0);
  CHECK(immersion_time_for(2.0, 1e-3) == doctest::Approx(0.5 * std::log(2.0 / 0.499)));
}
