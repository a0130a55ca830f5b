#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace horo {

/// Metric side: f of Schouten eigenvalues, base cone C = {x_i < 1/2}.
/// Hypersurface side: W of principal curvatures (opposite orientation), base
/// cone K = {x_i > -1}.
enum class Side { metric, hypersurface };

enum class TDirection { k_to_c, c_to_k };

/// Symmetric function of n reals together with the cone it is evaluated on.
/// `cone` is the full membership predicate (base cone intersected with any
/// further restriction such as a Garding cone). Gradient and Hessian are
/// optional; callers fall back to finite differences.
struct CurvatureFunction {
  using Eval = std::function<double(const Eigen::VectorXd&)>;
  using Grad = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using Hess = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  using Cone = std::function<bool(const Eigen::VectorXd&)>;

  Side side = Side::metric;
  std::string name;
  Eval eval;
  Grad gradient;
  Hess hessian;
  Cone cone;
  // lambda_0 (metric) or kappa_0 (hypersurface): the diagonal zero below which
  // the cone ends. Optional.
  std::optional<double> diagonal_floor;

  bool contains(const Eigen::VectorXd& x) const { return !cone || cone(x); }
  /// Throws PreconditionError outside the cone.
  double operator()(const Eigen::VectorXd& x) const;
};

bool in_cone_c(const Eigen::VectorXd& x);
bool in_cone_k(const Eigen::VectorXd& x);
bool in_cone_gamma_n(const Eigen::VectorXd& x);

/// k-th elementary symmetric polynomial (k = 0 gives 1).
double elementary_symmetric(const Eigen::VectorXd& x, int k);

// Built-in functions. Their cone is the side's base cone; power means are
// further restricted to Gamma_n.
CurvatureFunction sigma_k(int k, Side side);
CurvatureFunction mean_curvature(Side side);
CurvatureFunction power_mean(double p, Side side);

/// Forward (K -> C): 1/2 - 1/(1 + x_i). Inverse (C -> K): (1 + 2y_i)/(1 - 2y_i).
Eigen::VectorXd t_map(const Eigen::VectorXd& x, TDirection direction);

/// f -> W_f = f o T, or W -> f_W = W o T^{-1}. Gradient and Hessian are
/// transported by the chain rule when the source provides them.
CurvatureFunction conjugate(const CurvatureFunction& f);

/// W^t(x) = W(M_t(x_1), ..., M_t(x_n)) with M_t(x) = (x - tanh t)/(1 - x tanh t).
/// Gradient by the chain rule: dW^t/dx_i = (1 - tanh^2 t)/(1 - x_i tanh t)^2 *
/// (dW/dy_i)(M_t(x)). A variant of this formula with the denominator
/// (1 + x_i tanh t)^2 is the derivative factor of the inverse shift M_{-t}
/// and does not match finite differences of W^t.
CurvatureFunction flow_conjugate(const CurvatureFunction& w, double t);

/// Central-difference gradient of f at x.
Eigen::VectorXd fd_gradient(const CurvatureFunction& f, const Eigen::VectorXd& x, double h);
/// Central-difference Hessian of f at x (symmetric four-point cross terms).
Eigen::MatrixXd fd_hessian(const CurvatureFunction& f, const Eigen::VectorXd& x, double h);

struct EllipticityPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd partials;
  bool elliptic = false;
  // False when forward and backward differences disagree, i.e. f has a kink
  // at x and the partials are not meaningful.
  bool smooth = true;
};

struct EllipticityReport {
  std::vector<EllipticityPoint> points;
  bool all_elliptic = true;
  bool all_smooth = true;
};

/// Throws PreconditionError when f cannot be evaluated on a stencil point.
EllipticityReport ellipticity_check(const CurvatureFunction& f,
                                    const std::vector<Eigen::VectorXd>& points, double h = 1e-6);

/// Hessian of W_f at kappa in K from the metric-side f:
///   d^2 W_f / dk_i dk_j = f_ij / ((1+k_i)^2 (1+k_j)^2) - 2 delta_ij f_i / (1+k_i)^3,
/// with f's derivatives taken at T(kappa) (analytic when available, FD
/// otherwise).
Eigen::MatrixXd hessian_transform(const CurvatureFunction& f, const Eigen::VectorXd& kappa,
                                  double h = 1e-4);

struct HrResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = sum (a_i - 1)/(a_i + 1), rhs = 2 sum a_i - n. Requires a_i > -1.
HrResult hr_inequality(const Eigen::VectorXd& a);

/// Root x of F(x, ..., x) = c in [lo, hi] by bisection (n = dimension). Checks
/// that all partials at the root are positive (FD) and that the root lies
/// strictly above F.diagonal_floor when one is set. Throws NumericalError for no
/// sign change or a nonpositive derivative.
double admissible_constant(const CurvatureFunction& f, int n, double c, double lo, double hi,
                           double tol = 1e-13);

}  // namespace horo
