#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horo/error.hpp"
#include "horo/weingarten.hpp"

using namespace horo;

namespace {

// Coefficients of prod (1 + x_i s): c[k] = sigma_k(x).
std::vector<double> sigma_by_product(const Eigen::VectorXd& x) {
  std::vector<double> c{1.0};
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] += x(i) * c[k - 1];
  }
  return c;
}

double T(double x) { return 0.5 - 1.0 / (1.0 + x); }

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  const Eigen::Vector4d x(0.3, -1.2, 2.0, 0.7);
  const auto c = sigma_by_product(x);
  for (int k = 0; k <= 4; ++k) CHECK(elementary_symmetric(x, k) == doctest::Approx(c[k]));
  CHECK(elementary_symmetric(x, 5) == 0.0);
}

TEST_CASE("builtin gradients and Hessians match finite differences") {
  const Eigen::Vector3d lam(0.1, 0.3, -0.2);
  const Eigen::Vector3d kap(0.5, 1.5, 2.5);
  std::vector<std::pair<CurvatureFunction, Eigen::VectorXd>> cases{
      {sigma_k(1, Side::metric), lam},         {sigma_k(2, Side::metric), lam},
      {sigma_k(3, Side::hypersurface), kap},   {mean_curvature(Side::hypersurface), kap},
      {power_mean(2.0, Side::hypersurface), kap}, {power_mean(-1.0, Side::hypersurface), kap}};
  for (const auto& [f, x] : cases) {
    CAPTURE(f.name);
    CHECK((f.gradient(x) - fd_gradient(f, x, 1e-6)).cwiseAbs().maxCoeff() < 1e-7);
    if (f.hessian) CHECK((f.hessian(x) - fd_hessian(f, x, 1e-4)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("cones") {
  CHECK(in_cone_c(Eigen::Vector2d(0.49, -7)));
  CHECK_FALSE(in_cone_c(Eigen::Vector2d(0.5, 0)));
  CHECK(in_cone_k(Eigen::Vector2d(-0.99, 5)));
  CHECK_FALSE(in_cone_k(Eigen::Vector2d(-1.0, 5)));
  CHECK(in_cone_gamma_n(Eigen::Vector2d(0.1, 0.2)));
  CHECK_FALSE(in_cone_gamma_n(Eigen::Vector2d(0.0, 0.2)));
  CHECK_THROWS_AS(sigma_k(2, Side::metric)(Eigen::Vector2d(0.7, 0)), PreconditionError);
  CHECK_THROWS_AS(power_mean(1.0, Side::hypersurface)(Eigen::Vector2d(-0.5, 1)), PreconditionError);
}

TEST_CASE("T map and its inverse") {
  const Eigen::Vector3d x(-0.5, 0.0, 4.0);
  const Eigen::VectorXd y = t_map(x, TDirection::k_to_c);
  for (int i = 0; i < 3; ++i) CHECK(y(i) == doctest::Approx(T(x(i))));
  CHECK((t_map(y, TDirection::c_to_k) - x).norm() < 1e-14);
  CHECK_THROWS_AS(t_map(Eigen::Vector2d(-1.0, 0.0), TDirection::k_to_c), PreconditionError);
}

TEST_CASE("conjugate is f o T with chain-rule derivatives") {
  const CurvatureFunction f = sigma_k(2, Side::metric);
  const CurvatureFunction w = conjugate(f);
  CHECK(w.side == Side::hypersurface);
  const Eigen::Vector3d k(0.5, -0.2, 0.1);
  const Eigen::Vector3d tk(T(0.5), T(-0.2), T(0.1));
  CHECK(w(k) == doctest::Approx(f(tk)));
  CHECK((w.gradient(k) - fd_gradient(w, k, 1e-6)).cwiseAbs().maxCoeff() < 1e-7);
  CHECK((w.hessian(k) - fd_hessian(w, k, 1e-4)).cwiseAbs().maxCoeff() < 1e-5);
  CHECK((hessian_transform(f, k) - fd_hessian(w, k, 1e-4)).cwiseAbs().maxCoeff() < 1e-5);
  // The floor moves with T^{-1}: sigma_2 vanishes on the diagonal at 0, so W at T^{-1}(0) = 1.
  REQUIRE(w.diagonal_floor.has_value());
  CHECK(*w.diagonal_floor == doctest::Approx(1.0));
  // Round trip back to the metric side.
  const CurvatureFunction back = conjugate(w);
  CHECK(back(tk) == doctest::Approx(f(tk)));
}

TEST_CASE("flow conjugate") {
  const CurvatureFunction w = sigma_k(2, Side::hypersurface);
  const Eigen::Vector3d x(0.2, -0.4, 0.7);
  const double t = 0.6, th = std::tanh(t);
  Eigen::Vector3d m;
  for (int i = 0; i < 3; ++i) m(i) = (x(i) - th) / (1 - x(i) * th);
  const CurvatureFunction wt = flow_conjugate(w, t);
  CHECK(wt(x) == doctest::Approx(w(m)));
  CHECK((wt.gradient(x) - fd_gradient(wt, x, 1e-6)).cwiseAbs().maxCoeff() < 1e-7);
  CHECK(flow_conjugate(flow_conjugate(w, 0.3), 0.3)(x) == doctest::Approx(wt(x)).epsilon(1e-13));
}

TEST_CASE("ellipticity check") {
  std::vector<Eigen::VectorXd> pos{Eigen::Vector2d(0.1, 0.2), Eigen::Vector2d(0.3, 0.05)};
  const EllipticityReport ok = ellipticity_check(sigma_k(2, Side::metric), pos);
  CHECK(ok.all_elliptic);
  CHECK(ok.all_smooth);
  const EllipticityReport bad = ellipticity_check(sigma_k(2, Side::metric), {Eigen::Vector2d(-0.3, 0.1)});
  CHECK_FALSE(bad.all_elliptic);

  // max(x1, x2) has a kink on the diagonal.
  CurvatureFunction kink;
  kink.name = "max";
  kink.eval = [](const Eigen::VectorXd& x) { return x.maxCoeff(); };
  const EllipticityReport k = ellipticity_check(kink, {Eigen::Vector2d(0.2, 0.2)});
  CHECK_FALSE(k.all_smooth);
}

TEST_CASE("H-R inequality holds termwise") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a(-0.999, 10.0);
  for (int k = 0; k < 2000; ++k) {
    const Eigen::Vector3d x(a(rng), a(rng), a(rng));
    const HrResult r = hr_inequality(x);
    CHECK(r.holds);
    // Independent form: sum of -2 a^2/(a + 1) <= 0 equals lhs - rhs.
    double gap = 0.0;
    for (int i = 0; i < 3; ++i) gap += -2 * x(i) * x(i) / (x(i) + 1);
    CHECK(r.lhs - r.rhs == doctest::Approx(gap).epsilon(1e-9).scale(1.0));
  }
  const HrResult eq = hr_inequality(Eigen::Vector2d::Zero());
  CHECK(eq.lhs == doctest::Approx(eq.rhs));
}

TEST_CASE("admissible constant") {
  // sigma_2(s, s, s) = 3 s^2.
  const double root = admissible_constant(sigma_k(2, Side::metric), 3, 0.12, 0.0, 0.49);
  CHECK(root == doctest::Approx(0.2).epsilon(1e-12));
  CHECK_THROWS_AS(admissible_constant(sigma_k(2, Side::metric), 3, 5.0, 0.0, 0.49), NumericalError);
  // Below the floor: the root -0.2 is rejected.
  CHECK_THROWS_AS(admissible_constant(sigma_k(2, Side::metric), 3, 0.12, -0.4, -0.01), NumericalError);
}
