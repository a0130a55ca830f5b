#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace horo {

enum class ChartKind { stereographic, band };

/// Metric g_ij of the round sphere in chart coordinates, its inverse, and the
/// Christoffel symbols. christoffel[k](i, j) holds Gamma^k_ij.
struct MetricPack {
  Eigen::MatrixXd metric;
  Eigen::MatrixXd inverse;
  std::vector<Eigen::MatrixXd> christoffel;
};

/// A coordinate chart on the unit sphere S^n inside R^{n+1}.
///
/// Stereographic charts project from `pole`; the metric is 4/(1+|u|^2)^2 times
/// the identity and the chart covers S^n minus the pole.
///
/// Band charts use an arc parameter s in (-pi/2, pi/2) measured from the
/// equator {x_{n} = 0}, so that g = ds^2 + cos^2(s) g_{S^{n-1}} and the chart
/// covers S^n minus the two poles (0, ..., 0, -+1). The S^{n-1} factor is
/// parametrized by an angle phi when n = 2, and by stereographic coordinates w
/// (from the pole e_{n-1} of S^{n-1}) when n >= 3. Coordinate 0 is always s.
class Chart {
 public:
  static Chart stereographic(int n);
  static Chart stereographic(int n, const Eigen::VectorXd& pole);
  static Chart band(int n);

  ChartKind kind() const { return kind_; }
  int dim() const { return n_; }
  const Eigen::VectorXd& pole() const { return pole_; }

  bool in_range(const Eigen::VectorXd& u) const;

  /// Point of S^n in R^{n+1}.
  Eigen::VectorXd embed(const Eigen::VectorXd& u) const;
  /// d embed / du, shape (n+1) x n.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const;
  /// Chart coordinates of a unit vector x (inverse of embed).
  Eigen::VectorXd project(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd metric(const Eigen::VectorXd& u) const;
  MetricPack metric_pack(const Eigen::VectorXd& u) const;

 private:
  Chart(ChartKind kind, int n) : kind_(kind), n_(n) {}

  void require_range(const Eigen::VectorXd& u) const;

  ChartKind kind_;
  int n_;
  Eigen::VectorXd pole_;
  Eigen::MatrixXd frame_;  // orthogonal, maps e_n to pole_
};

/// Value, coordinate gradient and coordinate Hessian of a scalar field.
struct Jet {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

inline constexpr double kDefaultStep = 1e-4;

/// Scalar field rho(u) over chart coordinates, with a domain predicate and an
/// optional analytic jet. Evaluation is const and reentrant.
class ScalarField {
 public:
  using Value = std::function<double(const Eigen::VectorXd&)>;
  using Analytic = std::function<Jet(const Eigen::VectorXd&)>;
  using Domain = std::function<bool(const Eigen::VectorXd&)>;

  explicit ScalarField(Value value, Domain domain = {}, Analytic jet = {},
                       double step = kDefaultStep);

  /// rho == c everywhere, with exact jets.
  static ScalarField constant(double c);
  /// rho(u) = profile(s) with s = u(0), domain |s| < half_width. Analytic
  /// jets come from the first and second derivative of the profile.
  static ScalarField band_profile(std::function<double(double)> f,
                                  std::function<double(double)> df,
                                  std::function<double(double)> d2f, double half_width);
  /// rho(u) = f(chart.embed(u)), FD jets only.
  static ScalarField from_ambient(const Chart& chart,
                                  std::function<double(const Eigen::VectorXd&)> f);

  double operator()(const Eigen::VectorXd& u) const { return value_(u); }
  bool contains(const Eigen::VectorXd& u) const { return !domain_ || domain_(u); }
  bool has_analytic_jet() const { return static_cast<bool>(jet_); }
  Jet analytic_jet(const Eigen::VectorXd& u) const;
  double step() const { return step_; }
  ScalarField with_step(double h) const;
  /// Same field with the analytic jet dropped (forces finite differences).
  ScalarField without_analytic_jet() const;

 private:
  Value value_;
  Domain domain_;
  Analytic jet_;
  double step_;
};

enum class JetMode { automatic, analytic, finite_difference };

/// Central-difference jet with step h. Cross terms use the four-point stencil,
/// which is symmetric by construction. Throws PreconditionError for h <= 0 or
/// when a stencil point leaves the domain.
Jet fd_jet(const ScalarField& field, const Eigen::VectorXd& u, double h);

/// First and second covariant derivatives of rho with respect to g_{S^n}.
struct Derivatives {
  double value = 0.0;
  Eigen::VectorXd gradient;           // partial_i rho
  double grad_norm_sq = 0.0;          // g^{ij} rho_i rho_j
  Eigen::MatrixXd covariant_hessian;  // rho_{i,j} = d_i d_j rho - Gamma^k_ij d_k rho
  MetricPack pack;
};

/// Requires u in the chart range and, when differencing, the stencil (with a
/// 2h margin) inside the field's domain.
Derivatives gradient_hessian(const ScalarField& field, const Chart& chart,
                             const Eigen::VectorXd& u, JetMode mode = JetMode::automatic);

}  // namespace horo
