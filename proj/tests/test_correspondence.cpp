#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/gallery.hpp"

using namespace horo;

namespace {

const double kRho0 = 0.5 * std::log(2.0);

ConformalMetric sphere() { return *make_example("geodesic-sphere").metric; }

// Central-difference coordinate derivative of psi.
MinkVector dpsi(const ConformalMetric& m, Eigen::VectorXd u, int i, double t) {
  const double h = 1e-5;
  Eigen::VectorXd v = u;
  u(i) += h;
  v(i) -= h;
  const ImmerseOptions raw{.enforce_scale_bound = false};
  return (1.0 / (2 * h)) * (immerse(m, u, t, raw).psi - immerse(m, v, t, raw).psi);
}

}  // namespace

TEST_CASE("constant rho gives the geodesic sphere of radius rho") {
  const ConformalMetric m = sphere();
  for (const Eigen::Vector2d u : {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.5, -0.3)}) {
    const HypersurfacePoint p = immerse(m, u, 0.0);
    CHECK(p.phi[0] == doctest::Approx(std::cosh(kRho0)));
    CHECK(p.eta[0] == doctest::Approx(std::sinh(kRho0)));
    CHECK(on_hyperboloid(p.phi));
    CHECK(on_de_sitter(p.eta));
    CHECK(std::abs(mink_inner(p.phi, p.eta)) < 1e-14);
    const CurvatureSpectrum k = extrinsic_curvatures(m, u, 0.0);
    CHECK(k.values(0) == doctest::Approx(-3.0).epsilon(1e-8));
    CHECK(k.values(1) == doctest::Approx(-3.0).epsilon(1e-8));
  }
}

TEST_CASE("flowing the sphere by t gives radius rho + t") {
  const ConformalMetric m = sphere();
  for (double t : {0.5, 2.0}) {
    const CurvatureSpectrum k = extrinsic_curvatures(m, Eigen::Vector2d(0.2, 0.1), t);
    CHECK(k.values(0) == doctest::Approx(-1.0 / std::tanh(kRho0 + t)).epsilon(1e-7));
    CHECK(ricatti(-1.0 / std::tanh(kRho0), t) == doctest::Approx(-1.0 / std::tanh(kRho0 + t)));
    // |d phi|^2 grows by sinh^2(r + t)/sinh^2(r).
    const double ratio = std::pow(std::sinh(kRho0 + t) / std::sinh(kRho0), 2);
    CHECK(flow_metric_factor(-1.0 / std::tanh(kRho0), t) == doctest::Approx(ratio));
  }
}

TEST_CASE("ricatti is a flow") {
  for (double k : {-5.0, -0.3, 0.6}) {
    CHECK(ricatti(ricatti(k, 0.4), 0.9) == doctest::Approx(ricatti(k, 1.3)).epsilon(1e-12));
  }
  CHECK(ricatti(0.3, 0.0) == 0.3);
}

TEST_CASE("lambda_kappa round trips in both orientations") {
  for (double l : {-4.0, -0.5, 0.0, 0.2, 0.49}) {
    for (Orientation o : {Orientation::canonical, Orientation::opposite}) {
      const double k = lambda_kappa(l, o, Conversion::lambda_to_kappa);
      CHECK(lambda_kappa(k, o, Conversion::kappa_to_lambda) == doctest::Approx(l).epsilon(1e-12));
    }
    const double kc = lambda_kappa(l, Orientation::canonical, Conversion::lambda_to_kappa);
    const double ko = lambda_kappa(l, Orientation::opposite, Conversion::lambda_to_kappa);
    CHECK(kc < 1.0);
    CHECK(ko == doctest::Approx(-kc));
  }
}

TEST_CASE("support function and Gauss map read off psi") {
  const GalleryEntry band = make_example("incomplete-band");
  const Eigen::Vector2d u(0.3, 1.0);
  const HypersurfacePoint p = immerse(*band.metric, u, 0.5);
  const SupportData s = support_and_gauss(p);
  CHECK(s.rho_tilde == doctest::Approx((*band.metric).rho(u) + 0.5));
  CHECK((s.gauss_point - band.metric->chart.embed(u)).norm() < 1e-13);
  CHECK_THROWS_AS(support_and_gauss(MinkVector{1.0, 0.0, 0.0}), PreconditionError);
}

TEST_CASE("light-cone map pulls back to e^{2(rho + t)} g") {
  const GalleryEntry band = make_example("incomplete-band");
  const Eigen::Vector2d u(0.5, -0.4);
  const double t = 0.5;
  const Eigen::MatrixXd g = band.metric->chart.metric(u);
  const double f = std::exp(2 * (band.metric->rho(u) + t));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(mink_inner(dpsi(*band.metric, u, i, t), dpsi(*band.metric, u, j, t)) ==
            doctest::Approx(f * g(i, j)).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("principal curvatures agree with lambda_kappa of the Schouten eigenvalues") {
  GalleryParams p;
  p.cylinder_t = 1.0;
  const GalleryEntry cyl = make_example("cylinder-delaunay", p);
  for (double s : {-0.9, 0.0, 0.7}) {
    const Eigen::Vector2d u(s, 0.4);
    const CurvatureSpectrum k = extrinsic_curvatures(*cyl.metric, u, 0.0);
    const SchoutenReport sch = schouten(*cyl.metric, u);
    std::vector<double> expect;
    for (int i = 0; i < 2; ++i) {
      expect.push_back(lambda_kappa(sch.eigenvalues(i), Orientation::canonical, Conversion::lambda_to_kappa));
    }
    std::sort(expect.begin(), expect.end());
    CHECK(k.values(0) == doctest::Approx(expect[0]).epsilon(1e-6));
    CHECK(k.values(1) == doctest::Approx(expect[1]).epsilon(1e-6));
  }
}

TEST_CASE("scale bound and degeneracy") {
  const GalleryEntry round = make_example("round-degenerate");
  const Eigen::Vector2d u(0.4, 0.4);
  CHECK_THROWS_WITH_AS(immerse(*round.metric, u, 0.0), doctest::Contains("not immersed at this scale"),
                       NumericalError);
  const HypersurfacePoint p = immerse(*round.metric, u, 0.0, {.enforce_scale_bound = false});
  CHECK((p.phi.coords() - Eigen::Vector3d(1, 0, 0)).norm() < 1e-14);
  CHECK_THROWS_WITH_AS(extrinsic_curvatures(*round.metric, u, 0.0), doctest::Contains("not an immersion"),
                       NumericalError);
  // Flowing off the degenerate point gives the sphere of radius t.
  CHECK(extrinsic_curvatures(*round.metric, u, 1.0).values(0) ==
        doctest::Approx(-1.0 / std::tanh(1.0)).epsilon(1e-7));
}

TEST_CASE("Fefferman-Graham metric") {
  const ConformalMetric round{Chart::stereographic(2), ScalarField::constant(0.0)};
  const Eigen::Vector2d u(0.7, 0.1);
  for (double r : {0.0, 0.5, 1.9}) {
    const double f = std::pow(1 - r * r / 4, 2);
    CHECK((fg_metric(round, u, r) - f * round.chart.metric(u)).norm() < 1e-13);
  }
  const GalleryEntry band = make_example("incomplete-band");
  const Eigen::Vector2d v(0.6, 0.0);
  const Eigen::VectorXd lam = schouten(*band.metric, v).eigenvalues;
  const Eigen::VectorXd rel = fg_relative_eigenvalues(*band.metric, v, 0.8);
  Eigen::VectorXd expect = lam.unaryExpr([](double l) { return std::pow(1 - 0.32 * l, 2); });
  std::sort(expect.begin(), expect.end());
  CHECK((rel - expect).norm() < 1e-10);
  CHECK(compactified_sectional(0.3, 2.0) == doctest::Approx(0.3 - 2 * 0.09));
}

TEST_CASE("min_immersion_time") {
  const GalleryEntry sphere_e = make_example("geodesic-sphere");
  const auto pts = sample_points(sphere_e, 16);
  CHECK(min_immersion_time(*sphere_e.metric, pts, 1e-3) == 0.0);
  const GalleryEntry band = make_example("incomplete-band");
  const std::vector<Eigen::VectorXd> centre{Eigen::Vector2d(0.0, 0.0)};
  // At s = 0: rho = rho_s = 0 and rho_ss = 1, so the eigenvalues are -1/2 and 1/2.
  CHECK(min_immersion_time(*band.metric, centre, 1e-3) == doctest::Approx(0.5 * std::log(0.5 / 0.499)));
}
