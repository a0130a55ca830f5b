#include "horo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>

#include "horo/boundary.hpp"
#include "horo/correspondence.hpp"
#include "horo/error.hpp"
#include "horo/gallery.hpp"
#include "horo/weingarten.hpp"

namespace horo {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

// The three metric examples of the cross-oracle with their flow times and
// sample sets (at least 500 points each).
struct SweepCase {
  std::string name;
  ConformalMetric metric;
  double t;
  std::vector<Eigen::VectorXd> samples;
};

std::vector<SweepCase> sweep_cases() {
  std::vector<SweepCase> cases;

  const GalleryEntry sphere = make_example("geodesic-sphere");
  cases.push_back({"geodesic-sphere", *sphere.metric, 0.0, sample_points(sphere, 500)});

  const GalleryEntry band = make_example("incomplete-band");
  std::vector<Eigen::VectorXd> band_samples;
  for (double s : linspace(0.0, 0.8, 25)) {
    for (double phi : linspace(-3.0, 3.0, 21)) band_samples.push_back(Eigen::Vector2d(s, phi));
  }
  cases.push_back({"incomplete-band", *band.metric, band.default_t, band_samples});

  GalleryParams p;
  p.cylinder_t = 1.0;
  const GalleryEntry cyl = make_example("cylinder-delaunay", p);
  cases.push_back({"cylinder-delaunay", *cyl.metric, 0.0, sample_points(cyl, 500)});
  return cases;
}

ConformalMetric fd_version(const ConformalMetric& m, double h) {
  ConformalMetric out = m;
  out.rho = m.rho.without_analytic_jet().with_step(h);
  out.jets = JetMode::finite_difference;
  return out;
}

ConformalMetric analytic_version(const ConformalMetric& m, double h) {
  ConformalMetric out = m;
  out.rho = m.rho.with_step(h);
  out.jets = JetMode::analytic;
  return out;
}

InvariantCheck count_check(std::string name, std::size_t bad) {
  return make_check(std::move(name), static_cast<double>(bad), 0.0);
}

// --- 1 ----------------------------------------------------------------------
void criterion_gauss_degree(CriterionResult& r, const VerifyOptions&) {
  const auto t0 = Clock::now();
  const int d4 = gauss_winding(alpha_curve(4096));
  const int d8 = gauss_winding(alpha_curve(8192));
  const double secs = seconds_since(t0);
  r.details = {{"degree_4096", d4}, {"degree_8192", d8}};
  r.checks.push_back(make_check("gauss degree = 3 at m = 4096", std::abs(d4 - 3), 0.0));
  r.checks.push_back(make_check("gauss degree = 3 at m = 8192", std::abs(d8 - 3), 0.0));
  r.checks.push_back(make_check("runtime seconds", secs, 5.0));
}

// --- 2, 3, 4 ------------------------------------------------------------------
void criterion_sweeps(CriterionResult& r, const VerifyOptions& options, int which) {
  const auto t0 = Clock::now();
  for (const auto& c : sweep_cases()) {
    for (bool fd : {true, false}) {
      const ConformalMetric m = fd ? fd_version(c.metric, options.h) : analytic_version(c.metric, options.h);
      const auto rows = omp::curvature_sweep(m, c.samples, c.t);
      const SweepSummary s = summarize(rows);
      const std::string tag = c.name + (fd ? " (FD jets)" : " (analytic jets)");
      r.details[tag] = {{"samples", rows.size()},
                        {"failed", s.failed},
                        {"max_discrepancy", s.max_discrepancy},
                        {"constraint_error", s.constraint_error},
                        {"pullback_error", s.pullback_error}};
      r.checks.push_back(count_check(tag + ": failed samples", s.failed));
      if (which == 2) {
        if (fd) r.checks.push_back(make_check(tag + ": samples >= 500", 500.0 - std::min<double>(500, rows.size()), 0.0));
        r.checks.push_back(make_check(tag + ": max |kappa_ext - lambda_kappa(lambda)|",
                                      s.max_discrepancy, 1e-3));
        if (c.name == "geodesic-sphere") {
          double err = 0.0;
          for (const auto& row : rows) {
            if (row.ok) err = std::max(err, (row.kappa_extrinsic.array() + 3.0).abs().maxCoeff());
          }
          r.checks.push_back(make_check(tag + ": kappa = -coth rho0 = -3", err, 1e-5));
        }
      } else if (which == 3) {
        r.checks.push_back(make_check(tag + ": Minkowski constraints", s.constraint_error,
                                      fd ? 1e-5 : 1e-8));
      } else {
        r.checks.push_back(make_check(tag + ": pullback relative error", s.pullback_error, 1e-5));
      }
    }
  }
  if (which == 2) r.checks.push_back(make_check("runtime seconds", seconds_since(t0), 60.0));
}

// --- 5 ----------------------------------------------------------------------
void criterion_ricatti(CriterionResult& r, const VerifyOptions& options) {
  double flow_err = 0.0, geodesic_err = 0.0;
  std::size_t failures = 0;
  for (const auto& c : sweep_cases()) {
    const ConformalMetric m = fd_version(c.metric, options.h);
    for (std::size_t k = 0; k < c.samples.size(); k += 5) {
      const auto& u = c.samples[k];
      try {
        const Eigen::VectorXd base = extrinsic_curvatures(m, u, c.t).values;
        const ImmerseOptions raw{.enforce_scale_bound = false};
        const HypersurfacePoint p0 = immerse(m, u, c.t, raw);
        for (double t : {0.5, 1.0, 2.0}) {
          Eigen::VectorXd predicted = base.unaryExpr([t](double kap) { return ricatti(kap, t); });
          std::sort(predicted.begin(), predicted.end());
          const Eigen::VectorXd flowed = extrinsic_curvatures(m, u, c.t + t).values;
          flow_err = std::max(flow_err, (flowed - predicted).cwiseAbs().maxCoeff());
          const MinkVector direct = immerse(m, u, c.t + t, raw).phi;
          const MinkVector along = geodesic_point(p0.phi, p0.eta, t, 1e-8);
          geodesic_err = std::max(geodesic_err, (direct - along).coords().norm() /
                                                    direct.coords().norm());
        }
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  r.checks.push_back(count_check("samples failing to immerse", failures));
  r.checks.push_back(make_check("max |kappa(t) - ricatti(kappa, t)|, t in {0.5, 1, 2}", flow_err, 1e-3));
  r.checks.push_back(make_check("immerse at t vs geodesic flow of t = 0 data (relative)",
                                geodesic_err, 1e-8));

  // |kappa^t + 1| <= 2 (1 + |kappa|) e^{-2t} / (1 - max(kappa0, 0)) with kappa0 = 0.9.
  const double kappa0 = 0.9;
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  for (double kap : linspace(-10.0, kappa0, 110)) {
    for (double t : linspace(0.0, 10.0, 101)) {
      const double lhs = std::abs(ricatti(kap, t) + 1.0);
      const double rhs = 2.0 * (1.0 + std::abs(kap)) * std::exp(-2.0 * t) / (1.0 - std::max(kappa0, 0.0));
      worst = std::max(worst, lhs - rhs);
      if (lhs > rhs) ++violations;
    }
  }
  r.details = {{"max_flow_error", flow_err}, {"bound_max_lhs_minus_rhs", worst}};
  r.checks.push_back(count_check("horosphere convergence bound violations", violations));
}

// --- 6 ----------------------------------------------------------------------
void criterion_fg(CriterionResult& r, const VerifyOptions&) {
  const ConformalMetric round{Chart::stereographic(2), ScalarField::constant(0.0)};
  double round_err = 0.0;
  for (double a : linspace(-2.0, 2.0, 7)) {
    for (double b : linspace(-2.0, 2.0, 7)) {
      const Eigen::Vector2d u(a, b);
      const Eigen::MatrixXd g = round.chart.metric(u);
      for (double rr : linspace(0.0, 1.9, 39)) {
        const double f = 1.0 - rr * rr / 4.0;
        round_err = std::max(round_err, (fg_metric(round, u, rr) - f * f * g).cwiseAbs().maxCoeff());
      }
    }
  }
  r.checks.push_back(make_check("round metric g_r = (1 - r^2/4)^2 g", round_err, 1e-10));

  const GalleryEntry sphere = make_example("geodesic-sphere");
  const auto samples = sample_points(sphere, 25);
  double flow_err = 0.0;
  for (const auto& u : samples) {
    const Eigen::VectorXd kappa = extrinsic_curvatures(*sphere.metric, u, 0.0).values;
    for (double t : {0.1, 0.25, 0.5, 1.0, 2.0, 3.0}) {
      const Eigen::VectorXd rel = fg_relative_eigenvalues(*sphere.metric, u, 2.0 * std::exp(-t));
      Eigen::VectorXd expected = kappa.unaryExpr([t](double k) {
        return 4.0 * std::exp(-2.0 * t) * flow_metric_factor(k, t) / ((1.0 - k) * (1.0 - k));
      });
      std::sort(expected.begin(), expected.end());
      flow_err = std::max(flow_err, (rel - expected).cwiseAbs().maxCoeff());
    }
  }
  r.details = {{"round_error", round_err}, {"flow_factor_error", flow_err}};
  r.checks.push_back(make_check("g_r at r = 2e^{-t} vs flowed first fundamental form", flow_err, 1e-6));
}

// --- 7 ----------------------------------------------------------------------
void criterion_band(CriterionResult& r, const VerifyOptions& options) {
  const GalleryEntry band = make_example("incomplete-band");
  const ConformalMetric& m = *band.metric;

  ChartPath meridian;
  meridian.position = [](double tau) { return Eigen::VectorXd(Eigen::Vector2d(tau, 0.0)); };
  meridian.velocity = [](double) { return Eigen::VectorXd(Eigen::Vector2d(1.0, 0.0)); };
  const PathLength len = path_length(m, meridian);
  r.checks.push_back(make_check("meridian length = pi/2",
                                len.infinite ? INFINITY : std::abs(len.value - std::numbers::pi / 2), 1e-4));

  const Eigen::Vector2d half(0.5, 0.0);
  const Derivatives da = gradient_hessian(m.rho, m.chart, half, JetMode::analytic);
  const Derivatives dfd =
      gradient_hessian(m.rho.without_analytic_jet().with_step(options.h), m.chart, half,
                       JetMode::finite_difference);
  r.checks.push_back(make_check("rho_s(1/2) = 2/3 (analytic)", std::abs(da.gradient(0) - 2.0 / 3.0), 1e-6));
  r.checks.push_back(make_check("rho_ss(1/2) = 20/9 (analytic)",
                                std::abs(da.covariant_hessian(0, 0) - 20.0 / 9.0), 1e-6));
  r.checks.push_back(make_check("rho_s(1/2) = 2/3 (FD)", std::abs(dfd.gradient(0) - 2.0 / 3.0), 1e-4));
  r.checks.push_back(make_check("rho_ss(1/2) = 20/9 (FD)",
                                std::abs(dfd.covariant_hessian(0, 0) - 20.0 / 9.0), 1e-4));

  auto radial_error = [&](const ConformalMetric& metric, double s_max) {
    double err = 0.0;
    for (double s : linspace(0.0, s_max, 100)) {
      const double expected = -(1.0 + 0.5 * s * s) / std::pow(1.0 - s * s, 2);
      err = std::max(err, std::abs(schouten(metric, Eigen::Vector2d(s, 0.3)).conformal_part(0, 0) - expected));
    }
    return err;
  };
  const double err_analytic = radial_error(analytic_version(m, options.h), 0.95);
  const double err_fd = radial_error(fd_version(m, options.h), 0.8);
  r.checks.push_back(make_check("radial Schouten entry, 100 samples s in [0, 0.95] (analytic)", err_analytic, 1e-5));
  r.checks.push_back(make_check("radial Schouten entry, 100 samples s in [0, 0.8] (FD)", err_fd, 1e-5));

  std::vector<Eigen::VectorXd> samples;
  for (double s : linspace(0.0, 0.9, 10)) samples.push_back(Eigen::Vector2d(s, 0.0));
  for (int k = 2; k <= 8; ++k) samples.push_back(Eigen::Vector2d(1.0 - std::pow(10.0, -k), 0.0));
  const RealizabilityReport rep = realizability_report(m, samples);
  const bool flagged = std::find(rep.flags.begin(), rep.flags.end(),
                                 "Schouten not bounded from below") != rep.flags.end();
  r.checks.push_back(make_check("realizability flags 'Schouten not bounded from below'", flagged ? 0 : 1, 0));
  r.details = {{"meridian_length", len.value},
               {"quadrature_levels", len.levels},
               {"rho_s_fd", dfd.gradient(0)},
               {"rho_ss_fd", dfd.covariant_hessian(0, 0)},
               {"lambda_min", rep.lambda_min},
               {"lambda_max", rep.lambda_max}};
}

// --- 8 ----------------------------------------------------------------------
void criterion_unfolding(CriterionResult& r, const VerifyOptions&) {
  const auto t0 = Clock::now();
  const CurveImmersion curve = alpha_curve(8192);
  const std::size_t c0 = self_intersections(curve).size();
  const std::size_t c5 = self_intersections(curve.flowed(5.0)).size();
  r.checks.push_back(make_check("self-intersections at t = 0 (need >= 1)", c0 >= 1 ? 0 : 1, 0));
  r.checks.push_back(make_check("self-intersections at t = 5 (need 0)", static_cast<double>(c5), 0));

  std::string embed_msg;
  double t_emb = NAN;
  try {
    const EmbeddedTime e = first_embedded_time(curve, 5.0);
    t_emb = e.t_emb;
    embed_msg = "t_emb = " + std::to_string(e.t_emb);
  } catch (const std::exception& ex) {
    embed_msg = ex.what();
  }
  const bool in_range = t_emb > 0.0 && t_emb < 5.0;
  r.checks.push_back(make_check("first_embedded_time in (0, 5)", in_range ? 0 : 1, 0));

  Json counts = Json::array();
  std::size_t prev = 0;
  double worst_increase = 0.0;
  bool first = true;
  for (double t : linspace(0.0, 5.0, 20)) {
    const std::size_t c = self_intersections(curve.flowed(t)).size();
    counts.push_back({{"t", t}, {"count", c}});
    if (!first) worst_increase = std::max(worst_increase, static_cast<double>(c) - static_cast<double>(prev));
    prev = c;
    first = false;
  }
  r.checks.push_back(make_check("count non-increasing on 20-point t-grid (max increase)", worst_increase, 0));
  r.checks.push_back(make_check("runtime seconds", seconds_since(t0), 120.0));
  r.details = {{"count_t0", c0}, {"count_t5", c5}, {"first_embedded_time", embed_msg}, {"grid", counts}};
}

// --- 9 ----------------------------------------------------------------------
void criterion_weingarten(CriterionResult& r, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> dim(2, 6);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  auto random_vec = [&](int n, double a, double b) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(a, b);
    return v;
  };

  double hr_worst = -INFINITY;
  for (int k = 0; k < options.property_draws; ++k) {
    Eigen::VectorXd a = random_vec(dim(rng), -1.0, 10.0);
    a = a.cwiseMax(std::nextafter(-1.0, 0.0));
    const HrResult h = hr_inequality(a);
    hr_worst = std::max(hr_worst, h.lhs - h.rhs);
  }
  r.checks.push_back(make_check("H-R inequality on random draws (max lhs - rhs)", std::max(hr_worst, 0.0), 1e-12));

  std::size_t cone_fail = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = dim(rng);
    const Eigen::VectorXd x = random_vec(n, -0.99, 5.0);
    const Eigen::VectorXd d = random_vec(n, 1e-3, 5.0);
    const Eigen::VectorXd tx = t_map(x, TDirection::k_to_c);
    const Eigen::VectorXd txd = t_map(x + d, TDirection::k_to_c);
    if (!((txd - tx).array() > 0.0).all() || !in_cone_c(txd)) ++cone_fail;
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y(i) = tx(i) + uniform(0.0, 0.5 - tx(i)) ;
    if (!in_cone_c(y) || ((y - tx).array() <= 0.0).any()) continue;  // endpoint draw
    if (!((t_map(y, TDirection::c_to_k) - x).array() > 0.0).all()) ++cone_fail;
  }
  r.checks.push_back(count_check("cone identity T(x + Gamma_n) = (T(x) + Gamma_n) in C, failures", cone_fail));

  double order_worst = 0.0;
  int accepted = 0;
  while (accepted < options.property_draws) {
    const int n = dim(rng);
    const Eigen::VectorXd lam = random_vec(n, -1.0, 0.5);
    if (lam.sum() < 0.0 || !in_cone_c(lam)) continue;
    ++accepted;
    const Eigen::VectorXd kap = t_map(lam, TDirection::c_to_k);
    order_worst = std::max(order_worst, static_cast<double>(n) - kap.sum());
  }
  r.checks.push_back(make_check("sum lambda >= 0 implies sum kappa >= n (max shortfall)", order_worst, 1e-9));

  const Eigen::Vector3d kappa(0.5, -0.2, 0.1);
  double hess_err = 0.0;
  for (int k : {1, 2, 3}) {
    const CurvatureFunction f = sigma_k(k, Side::metric);
    const CurvatureFunction w = conjugate(f);
    hess_err = std::max(hess_err, (fd_hessian(w, kappa, 1e-4) - hessian_transform(f, kappa)).cwiseAbs().maxCoeff());
  }
  r.checks.push_back(make_check("Hessian transform vs FD Hessian of W_f", hess_err, 1e-5));

  const CurvatureFunction w2 = sigma_k(2, Side::hypersurface);
  double semigroup = 0.0, grad_err = 0.0, inverse_shift_err = 0.0;
  std::size_t sign_mismatch = 0;
  for (int k = 0; k < 1000; ++k) {
    const Eigen::VectorXd x = random_vec(3, -0.9, 0.9);
    const double s = uniform(0.0, 1.5), t = uniform(0.0, 1.5);
    const double lhs = flow_conjugate(flow_conjugate(w2, s), t)(x);
    const double rhs = flow_conjugate(w2, s + t)(x);
    semigroup = std::max(semigroup, std::abs(lhs - rhs));

    const CurvatureFunction wt = flow_conjugate(w2, t);
    const Eigen::VectorXd analytic = wt.gradient(x);
    const Eigen::VectorXd fd = fd_gradient(wt, x, 1e-6);
    grad_err = std::max(grad_err, (analytic - fd).cwiseAbs().maxCoeff());
    for (int i = 0; i < 3; ++i) {
      if ((analytic(i) > 0.0) != (fd(i) > 0.0) && std::abs(fd(i)) > 1e-6) ++sign_mismatch;
    }
    // Variant with denominator (1 + x_i tanh t)^2.
    const double th = std::tanh(t);
    Eigen::VectorXd y(3);
    for (int i = 0; i < 3; ++i) y(i) = (x(i) - th) / (1.0 - x(i) * th);
    const Eigen::VectorXd base = w2.gradient(y);
    for (int i = 0; i < 3; ++i) {
      const double inv_shift = (1.0 - th * th) / std::pow(1.0 + x(i) * th, 2) * base(i);
      inverse_shift_err = std::max(inverse_shift_err, std::abs(inv_shift - fd(i)));
    }
  }
  r.checks.push_back(make_check("(W^s)^t = W^{s+t}", semigroup, 1e-9));
  r.checks.push_back(make_check("W^t chain-rule gradient vs FD", grad_err, 1e-6));
  r.checks.push_back(count_check("W^t gradient sign mismatches vs FD", sign_mismatch));
  r.details = {{"hr_max_lhs_minus_rhs", hr_worst},
               {"order_max_shortfall", order_worst},
               {"hessian_error", hess_err},
               {"wt_chain_rule_error", grad_err},
               {"wt_inverse_shift_denominator_error", inverse_shift_err}};
}

// --- 10 ---------------------------------------------------------------------
void criterion_collapse(CriterionResult& r, const VerifyOptions& options) {
  const GalleryEntry e = make_example("round-degenerate");
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  double phi_err = 0.0;
  std::size_t not_flagged = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector2d u(coord(rng), coord(rng));
    const HypersurfacePoint p = immerse(*e.metric, u, 0.0, {.enforce_scale_bound = false});
    phi_err = std::max(phi_err, (p.phi.coords() - Eigen::Vector3d(1.0, 0.0, 0.0)).cwiseAbs().maxCoeff());
    try {
      extrinsic_curvatures(*e.metric, u, 0.0);
      ++not_flagged;
    } catch (const NumericalError& ex) {
      if (std::string(ex.what()).find("not an immersion") == std::string::npos) ++not_flagged;
    }
  }
  r.checks.push_back(make_check("phi = (1, 0, 0) at 100 random points", phi_err, 1e-12));
  r.checks.push_back(count_check("points where 'not an immersion' was not reported", not_flagged));
}

// --- 11 ---------------------------------------------------------------------
void criterion_boundary(CriterionResult& r, const VerifyOptions&) {
  const BoundaryReport band = boundary_at_infinity(make_example("incomplete-band"));
  double lat_err = band.clusters.empty() ? INFINITY : 0.0;
  bool north = false, south = false;
  for (const auto& c : band.clusters) {
    const double lat = std::asin(std::clamp(c.center(2), -1.0, 1.0));
    lat_err = std::max(lat_err, std::abs(std::abs(lat) - 1.0));
    north = north || lat > 0.0;
    south = south || lat < 0.0;
  }
  r.checks.push_back(make_check("incomplete-band clusters on s = +-1 (angular error)", lat_err, 1e-2));
  r.checks.push_back(make_check("incomplete-band clusters on both boundary circles", north && south ? 0 : 1, 0));

  const BoundaryReport cyl = boundary_at_infinity(make_example("cylinder-delaunay"));
  r.checks.push_back(make_check("cylinder-delaunay cluster count = 2",
                                std::abs(static_cast<double>(cyl.clusters.size()) - 2.0), 0));
  double antipodal = INFINITY;
  if (cyl.clusters.size() == 2) {
    antipodal = std::acos(std::clamp(-cyl.clusters[0].center.dot(cyl.clusters[1].center), -1.0, 1.0));
  }
  r.checks.push_back(make_check("cylinder-delaunay clusters antipodal (angle)", antipodal, 1e-2));

  const BoundaryReport sphere = boundary_at_infinity(make_example("geodesic-sphere"));
  r.checks.push_back(make_check("geodesic-sphere has no ideal points",
                                static_cast<double>(sphere.clusters.size()), 0));
  r.details = {{"band_clusters", band.clusters.size()},
               {"band_escaped", band.escaped},
               {"cylinder_clusters", cyl.clusters.size()},
               {"sphere_escaped", sphere.escaped}};
}

const char* title(int id) {
  switch (id) {
    case 1: return "Gauss-map degree of the alpha-curve";
    case 2: return "Curvature cross-oracle (lambda_kappa vs I/II)";
    case 3: return "Minkowski constraints";
    case 4: return "Pullback identity of the light-cone map";
    case 5: return "Ricatti consistency and horosphere convergence";
    case 6: return "Fefferman-Graham expansion";
    case 7: return "Incomplete-band reproductions";
    case 8: return "Unfolding of the alpha-curve along the normal flow";
    case 9: return "Weingarten calculus";
    case 10: return "Degenerate collapse of the round metric";
    case 11: return "Boundary at infinity";
    default: return "unknown";
  }
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = title(id);
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: criterion_gauss_degree(r, options); break;
      case 2: criterion_sweeps(r, options, 2); break;
      case 3: criterion_sweeps(r, options, 3); break;
      case 4: criterion_sweeps(r, options, 4); break;
      case 5: criterion_ricatti(r, options); break;
      case 6: criterion_fg(r, options); break;
      case 7: criterion_band(r, options); break;
      case 8: criterion_unfolding(r, options); break;
      case 9: criterion_weingarten(r, options); break;
      case 10: criterion_collapse(r, options); break;
      case 11: criterion_boundary(r, options); break;
      default: throw PreconditionError("unknown criterion " + std::to_string(id));
    }
  } catch (const PreconditionError& e) {
    if (id < 1 || id > kCriterionCount) throw;
    r.checks.push_back({std::string("exception: ") + e.what(), INFINITY, 0.0, false});
  } catch (const std::exception& e) {
    r.checks.push_back({std::string("exception: ") + e.what(), INFINITY, 0.0, false});
  }
  r.seconds = seconds_since(t0);
  r.pass = !r.checks.empty() &&
           std::all_of(r.checks.begin(), r.checks.end(), [](const InvariantCheck& c) { return c.pass; });
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (options.only.empty() || options.only.count(id)) out.push_back(run_criterion(id, options));
  }
  return out;
}

Json criterion_json(const CriterionResult& r) {
  Report rep;
  rep.checks = r.checks;
  Json j{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}};
  j["checks"] = rep.to_json()["invariant_checks"];
  j["details"] = r.details;
  return j;
}

}  // namespace horo
