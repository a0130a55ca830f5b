#include "horo/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "horo/error.hpp"

namespace horo {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Gamma^i_jk for the conformally flat metric e^{2L} delta, written into the
// index block starting at `offset`.
void add_conformal_christoffel(std::vector<Eigen::MatrixXd>& gamma, int offset,
                               const Eigen::VectorXd& dlog) {
  const auto m = dlog.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = 0; k < m; ++k) {
        double v = 0.0;
        if (i == j) v += dlog(k);
        if (i == k) v += dlog(j);
        if (j == k) v -= dlog(i);
        gamma[offset + i](offset + j, offset + k) += v;
      }
    }
  }
}

// Inverse stereographic projection R^m -> S^m from the pole e_m.
Eigen::VectorXd unproject(const Eigen::VectorXd& w) {
  const double d = 1.0 + w.squaredNorm();
  Eigen::VectorXd y(w.size() + 1);
  y.head(w.size()) = 2.0 * w / d;
  y(w.size()) = 1.0 - 2.0 / d;
  return y;
}

Eigen::MatrixXd unproject_jacobian(const Eigen::VectorXd& w) {
  const auto m = w.size();
  const double d = 1.0 + w.squaredNorm();
  Eigen::MatrixXd j(m + 1, m);
  j.topRows(m) = 2.0 / d * Eigen::MatrixXd::Identity(m, m) - 4.0 / (d * d) * w * w.transpose();
  j.row(m) = 4.0 / (d * d) * w.transpose();
  return j;
}

Eigen::VectorXd project_from_pole(const Eigen::VectorXd& y) {
  const auto m = y.size() - 1;
  const double denom = 1.0 - y(m);
  if (denom <= 1e-300) throw PreconditionError("chart: point is the projection pole");
  return y.head(m) / denom;
}

}  // namespace

Chart Chart::stereographic(int n) {
  Eigen::VectorXd pole = Eigen::VectorXd::Zero(n + 1);
  pole(n) = 1.0;
  return stereographic(n, pole);
}

Chart Chart::stereographic(int n, const Eigen::VectorXd& pole) {
  if (n < 1) throw PreconditionError("stereographic chart needs n >= 1");
  if (pole.size() != n + 1 || std::abs(pole.norm() - 1.0) > 1e-12) {
    throw PreconditionError("stereographic chart: pole must be a unit vector in R^{n+1}");
  }
  Chart c(ChartKind::stereographic, n);
  c.pole_ = pole;
  Eigen::VectorXd en = Eigen::VectorXd::Zero(n + 1);
  en(n) = 1.0;
  const Eigen::VectorXd v = en - pole;
  c.frame_ = Eigen::MatrixXd::Identity(n + 1, n + 1);
  if (v.norm() > 1e-14) c.frame_ -= 2.0 * v * v.transpose() / v.squaredNorm();
  return c;
}

Chart Chart::band(int n) {
  if (n < 2) throw PreconditionError("band chart needs n >= 2");
  Chart c(ChartKind::band, n);
  c.pole_ = Eigen::VectorXd::Zero(n + 1);
  c.pole_(n) = 1.0;
  c.frame_ = Eigen::MatrixXd::Identity(n + 1, n + 1);
  return c;
}

bool Chart::in_range(const Eigen::VectorXd& u) const {
  if (u.size() != n_ || !u.allFinite()) return false;
  if (kind_ == ChartKind::band) return std::abs(u(0)) < kHalfPi;
  return true;
}

void Chart::require_range(const Eigen::VectorXd& u) const {
  if (u.size() != n_) {
    throw PreconditionError("chart: expected " + std::to_string(n_) + " coordinates, got " +
                            std::to_string(u.size()));
  }
  if (!in_range(u)) throw PreconditionError("chart: coordinates outside chart range");
}

Eigen::VectorXd Chart::embed(const Eigen::VectorXd& u) const {
  require_range(u);
  if (kind_ == ChartKind::stereographic) return frame_ * unproject(u);
  const double s = u(0);
  Eigen::VectorXd x(n_ + 1);
  if (n_ == 2) {
    x << std::cos(s) * std::cos(u(1)), std::cos(s) * std::sin(u(1)), std::sin(s);
  } else {
    x.head(n_) = std::cos(s) * unproject(u.tail(n_ - 1));
    x(n_) = std::sin(s);
  }
  return x;
}

Eigen::MatrixXd Chart::jacobian(const Eigen::VectorXd& u) const {
  require_range(u);
  if (kind_ == ChartKind::stereographic) return frame_ * unproject_jacobian(u);
  const double s = u(0);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n_ + 1, n_);
  if (n_ == 2) {
    const double phi = u(1);
    j.col(0) << -std::sin(s) * std::cos(phi), -std::sin(s) * std::sin(phi), std::cos(s);
    j.col(1) << -std::cos(s) * std::sin(phi), std::cos(s) * std::cos(phi), 0.0;
  } else {
    const Eigen::VectorXd w = u.tail(n_ - 1);
    j.block(0, 0, n_, 1) = -std::sin(s) * unproject(w);
    j(n_, 0) = std::cos(s);
    j.block(0, 1, n_, n_ - 1) = std::cos(s) * unproject_jacobian(w);
  }
  return j;
}

Eigen::VectorXd Chart::project(const Eigen::VectorXd& x) const {
  if (x.size() != n_ + 1) throw PreconditionError("chart: ambient point has wrong dimension");
  if (kind_ == ChartKind::stereographic) return project_from_pole(frame_.transpose() * x);
  const double s = std::asin(std::clamp(x(n_), -1.0, 1.0));
  const double c = std::cos(s);
  if (c <= 1e-300) throw PreconditionError("band chart: point is a pole");
  Eigen::VectorXd u(n_);
  u(0) = s;
  if (n_ == 2) {
    u(1) = std::atan2(x(1), x(0));
  } else {
    u.tail(n_ - 1) = project_from_pole(x.head(n_) / c);
  }
  return u;
}

Eigen::MatrixXd Chart::metric(const Eigen::VectorXd& u) const {
  require_range(u);
  if (kind_ == ChartKind::stereographic) {
    const double d = 1.0 + u.squaredNorm();
    return 4.0 / (d * d) * Eigen::MatrixXd::Identity(n_, n_);
  }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n_, n_);
  g(0, 0) = 1.0;
  const double c2 = std::cos(u(0)) * std::cos(u(0));
  if (n_ == 2) {
    g(1, 1) = c2;
  } else {
    const double d = 1.0 + u.tail(n_ - 1).squaredNorm();
    g.bottomRightCorner(n_ - 1, n_ - 1) = c2 * 4.0 / (d * d) * Eigen::MatrixXd::Identity(n_ - 1, n_ - 1);
  }
  return g;
}

MetricPack Chart::metric_pack(const Eigen::VectorXd& u) const {
  MetricPack pack;
  pack.metric = metric(u);
  pack.inverse = pack.metric.diagonal().cwiseInverse().asDiagonal();
  pack.christoffel.assign(n_, Eigen::MatrixXd::Zero(n_, n_));

  if (kind_ == ChartKind::stereographic) {
    const double d = 1.0 + u.squaredNorm();
    add_conformal_christoffel(pack.christoffel, 0, -2.0 * u / d);
    return pack;
  }

  const double s = u(0);
  const double tan_s = std::tan(s);
  // Gamma^s_ij = tan s g_ij on the S^{n-1} block; Gamma^i_sj = -tan s delta_ij.
  for (int a = 1; a < n_; ++a) {
    pack.christoffel[0](a, a) = tan_s * pack.metric(a, a);
    pack.christoffel[a](0, a) = -tan_s;
    pack.christoffel[a](a, 0) = -tan_s;
  }
  if (n_ > 2) {
    const Eigen::VectorXd w = u.tail(n_ - 1);
    add_conformal_christoffel(pack.christoffel, 1, -2.0 * w / (1.0 + w.squaredNorm()));
  }
  return pack;
}

ScalarField::ScalarField(Value value, Domain domain, Analytic jet, double step)
    : value_(std::move(value)), domain_(std::move(domain)), jet_(std::move(jet)), step_(step) {
  if (!value_) throw PreconditionError("ScalarField: value function is required");
  if (!(step_ > 0.0)) throw PreconditionError("ScalarField: FD step must be positive");
}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](const Eigen::VectorXd&) { return c; }, {},
                     [c](const Eigen::VectorXd& u) {
                       return Jet{c, Eigen::VectorXd::Zero(u.size()),
                                  Eigen::MatrixXd::Zero(u.size(), u.size())};
                     });
}

ScalarField ScalarField::band_profile(std::function<double(double)> f,
                                      std::function<double(double)> df,
                                      std::function<double(double)> d2f, double half_width) {
  Analytic jet;
  if (df && d2f) {
    jet = [f, df, d2f](const Eigen::VectorXd& u) {
      Jet j{f(u(0)), Eigen::VectorXd::Zero(u.size()), Eigen::MatrixXd::Zero(u.size(), u.size())};
      j.gradient(0) = df(u(0));
      j.hessian(0, 0) = d2f(u(0));
      return j;
    };
  }
  return ScalarField([f](const Eigen::VectorXd& u) { return f(u(0)); },
                     [half_width](const Eigen::VectorXd& u) { return std::abs(u(0)) < half_width; },
                     std::move(jet));
}

ScalarField ScalarField::from_ambient(const Chart& chart,
                                      std::function<double(const Eigen::VectorXd&)> f) {
  return ScalarField([chart, f](const Eigen::VectorXd& u) { return f(chart.embed(u)); },
                     [chart](const Eigen::VectorXd& u) { return chart.in_range(u); });
}

Jet ScalarField::analytic_jet(const Eigen::VectorXd& u) const {
  if (!jet_) throw PreconditionError("ScalarField: no analytic jet available");
  return jet_(u);
}

ScalarField ScalarField::with_step(double h) const {
  ScalarField copy = *this;
  if (!(h > 0.0)) throw PreconditionError("ScalarField: FD step must be positive");
  copy.step_ = h;
  return copy;
}

ScalarField ScalarField::without_analytic_jet() const {
  ScalarField copy = *this;
  copy.jet_ = {};
  return copy;
}

Jet fd_jet(const ScalarField& field, const Eigen::VectorXd& u, double h) {
  if (!(h > 0.0)) throw PreconditionError("fd_jet: step must be positive");
  const auto n = u.size();
  auto eval = [&](const Eigen::VectorXd& p) {
    if (!field.contains(p)) throw PreconditionError("fd_jet: stencil leaves the domain");
    return field(p);
  };

  Jet jet{eval(u), Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  std::vector<double> plus(n), minus(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd p = u, m = u;
    p(i) += h;
    m(i) -= h;
    plus[i] = eval(p);
    minus[i] = eval(m);
    jet.gradient(i) = (plus[i] - minus[i]) / (2.0 * h);
    jet.hessian(i, i) = (plus[i] - 2.0 * jet.value + minus[i]) / (h * h);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::VectorXd pp = u, pm = u, mp = u, mm = u;
      pp(i) += h, pp(j) += h;
      pm(i) += h, pm(j) -= h;
      mp(i) -= h, mp(j) += h;
      mm(i) -= h, mm(j) -= h;
      const double v = (eval(pp) - eval(pm) - eval(mp) + eval(mm)) / (4.0 * h * h);
      jet.hessian(i, j) = v;
      jet.hessian(j, i) = v;
    }
  }
  return jet;
}

Derivatives gradient_hessian(const ScalarField& field, const Chart& chart,
                             const Eigen::VectorXd& u, JetMode mode) {
  if (!chart.in_range(u)) throw PreconditionError("gradient_hessian: point outside chart range");
  if (!field.contains(u)) throw PreconditionError("gradient_hessian: point outside domain");

  const bool analytic = mode == JetMode::analytic ||
                        (mode == JetMode::automatic && field.has_analytic_jet());
  Jet jet;
  if (analytic) {
    jet = field.analytic_jet(u);
  } else {
    const double h = field.step();
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      for (double sign : {-2.0, 2.0}) {
        Eigen::VectorXd p = u;
        p(i) += sign * h;
        if (!chart.in_range(p) || !field.contains(p)) {
          throw PreconditionError(
              "gradient_hessian: sample too close to the domain boundary for the FD stencil");
        }
      }
    }
    jet = fd_jet(field, u, h);
  }

  Derivatives d;
  d.value = jet.value;
  d.gradient = jet.gradient;
  d.pack = chart.metric_pack(u);
  d.grad_norm_sq = jet.gradient.dot(d.pack.inverse * jet.gradient);
  d.covariant_hessian = jet.hessian;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    d.covariant_hessian -= d.pack.christoffel[k] * jet.gradient(k);
  }
  return d;
}

}  // namespace horo
