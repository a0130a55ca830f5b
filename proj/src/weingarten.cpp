#include "horo/weingarten.hpp"

#include <cmath>
#include <string>

#include "horo/error.hpp"

namespace horo {
namespace {

bool base_cone(Side side, const Eigen::VectorXd& x) {
  return side == Side::metric ? in_cone_c(x) : in_cone_k(x);
}

Eigen::VectorXd drop(const Eigen::VectorXd& x, Eigen::Index i) {
  Eigen::VectorXd out(x.size() - 1);
  for (Eigen::Index a = 0, b = 0; a < x.size(); ++a) {
    if (a != i) out(b++) = x(a);
  }
  return out;
}

// Derivatives of T and T^{-1}, componentwise.
double t_forward(double x) { return 0.5 - 1.0 / (1.0 + x); }
double t_inverse(double y) { return (1.0 + 2.0 * y) / (1.0 - 2.0 * y); }

Eigen::VectorXd gradient_or_fd(const CurvatureFunction& f, const Eigen::VectorXd& x, double h) {
  return f.gradient ? f.gradient(x) : fd_gradient(f, x, h);
}

Eigen::MatrixXd hessian_or_fd(const CurvatureFunction& f, const Eigen::VectorXd& x, double h) {
  return f.hessian ? f.hessian(x) : fd_hessian(f, x, h);
}

}  // namespace

double CurvatureFunction::operator()(const Eigen::VectorXd& x) const {
  if (!contains(x)) throw PreconditionError(name + ": point outside the cone");
  return eval(x);
}

bool in_cone_c(const Eigen::VectorXd& x) { return (x.array() < 0.5).all(); }
bool in_cone_k(const Eigen::VectorXd& x) { return (x.array() > -1.0).all(); }
bool in_cone_gamma_n(const Eigen::VectorXd& x) { return (x.array() > 0.0).all(); }

double elementary_symmetric(const Eigen::VectorXd& x, int k) {
  if (k < 0) throw PreconditionError("elementary_symmetric: k must be >= 0");
  if (k > x.size()) return 0.0;
  // e[j] accumulates sigma_j of the prefix.
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j) e[j] += x(i) * e[j - 1];
  }
  return e[k];
}

CurvatureFunction sigma_k(int k, Side side) {
  if (k < 1) throw PreconditionError("sigma_k: k must be >= 1");
  CurvatureFunction f;
  f.side = side;
  f.name = "sigma_" + std::to_string(k);
  f.eval = [k](const Eigen::VectorXd& x) { return elementary_symmetric(x, k); };
  f.gradient = [k](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) g(i) = elementary_symmetric(drop(x, i), k - 1);
    return g;
  };
  f.hessian = [k](const Eigen::VectorXd& x) {
    const auto n = x.size();
    Eigen::MatrixXd hm = Eigen::MatrixXd::Zero(n, n);
    if (k < 2) return hm;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double v = elementary_symmetric(drop(drop(x, j), i), k - 2);
        hm(i, j) = v;
        hm(j, i) = v;
      }
    }
    return hm;
  };
  f.cone = [side](const Eigen::VectorXd& x) { return base_cone(side, x); };
  f.diagonal_floor = 0.0;
  return f;
}

CurvatureFunction mean_curvature(Side side) {
  CurvatureFunction f;
  f.side = side;
  f.name = "mean";
  f.eval = [](const Eigen::VectorXd& x) { return x.mean(); };
  f.gradient = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(x.size(), 1.0 / static_cast<double>(x.size()));
  };
  f.hessian = [](const Eigen::VectorXd& x) { return Eigen::MatrixXd::Zero(x.size(), x.size()); };
  f.cone = [side](const Eigen::VectorXd& x) { return base_cone(side, x); };
  f.diagonal_floor = 0.0;
  return f;
}

CurvatureFunction power_mean(double p, Side side) {
  if (p == 0.0) throw PreconditionError("power_mean: p = 0 is not supported");
  CurvatureFunction f;
  f.side = side;
  f.name = "power_mean_" + std::to_string(p);
  f.eval = [p](const Eigen::VectorXd& x) {
    return std::pow(x.array().pow(p).mean(), 1.0 / p);
  };
  f.gradient = [p](const Eigen::VectorXd& x) {
    const double n = static_cast<double>(x.size());
    const double m = x.array().pow(p).mean();
    return Eigen::VectorXd(std::pow(m, 1.0 / p - 1.0) * x.array().pow(p - 1.0) / n);
  };
  f.cone = [side](const Eigen::VectorXd& x) { return base_cone(side, x) && in_cone_gamma_n(x); };
  return f;
}

Eigen::VectorXd t_map(const Eigen::VectorXd& x, TDirection direction) {
  if (direction == TDirection::k_to_c) {
    if (!in_cone_k(x)) throw PreconditionError("t_map: input outside K (x_i > -1)");
    return x.unaryExpr(&t_forward);
  }
  if (!in_cone_c(x)) throw PreconditionError("t_map: input outside C (x_i < 1/2)");
  return x.unaryExpr(&t_inverse);
}

CurvatureFunction conjugate(const CurvatureFunction& f) {
  CurvatureFunction g;
  if (f.side == Side::metric) {
    g.side = Side::hypersurface;
    g.name = "W[" + f.name + "]";
    g.eval = [f](const Eigen::VectorXd& k) { return f.eval(k.unaryExpr(&t_forward)); };
    g.cone = [f](const Eigen::VectorXd& k) {
      return in_cone_k(k) && f.contains(k.unaryExpr(&t_forward));
    };
    if (f.gradient) {
      g.gradient = [f](const Eigen::VectorXd& k) {
        const Eigen::ArrayXd a = (1.0 + k.array()).square().inverse();
        return Eigen::VectorXd(f.gradient(k.unaryExpr(&t_forward)).array() * a);
      };
    }
    if (f.gradient && f.hessian) {
      g.hessian = [f](const Eigen::VectorXd& k) {
        const Eigen::VectorXd lam = k.unaryExpr(&t_forward);
        const Eigen::VectorXd a = (1.0 + k.array()).square().inverse();
        Eigen::MatrixXd hm = a.asDiagonal() * f.hessian(lam) * a.asDiagonal();
        const Eigen::VectorXd grad = f.gradient(lam);
        for (Eigen::Index i = 0; i < k.size(); ++i) hm(i, i) -= 2.0 * grad(i) / std::pow(1.0 + k(i), 3);
        return hm;
      };
    }
    if (f.diagonal_floor && *f.diagonal_floor < 0.5) g.diagonal_floor = t_inverse(*f.diagonal_floor);
    return g;
  }

  g.side = Side::metric;
  g.name = "f[" + f.name + "]";
  g.eval = [f](const Eigen::VectorXd& y) { return f.eval(y.unaryExpr(&t_inverse)); };
  g.cone = [f](const Eigen::VectorXd& y) {
    return in_cone_c(y) && f.contains(y.unaryExpr(&t_inverse));
  };
  if (f.gradient) {
    g.gradient = [f](const Eigen::VectorXd& y) {
      const Eigen::ArrayXd a = 4.0 * (1.0 - 2.0 * y.array()).square().inverse();
      return Eigen::VectorXd(f.gradient(y.unaryExpr(&t_inverse)).array() * a);
    };
  }
  if (f.gradient && f.hessian) {
    g.hessian = [f](const Eigen::VectorXd& y) {
      const Eigen::VectorXd k = y.unaryExpr(&t_inverse);
      const Eigen::VectorXd a = 4.0 * (1.0 - 2.0 * y.array()).square().inverse();
      Eigen::MatrixXd hm = a.asDiagonal() * f.hessian(k) * a.asDiagonal();
      const Eigen::VectorXd grad = f.gradient(k);
      for (Eigen::Index i = 0; i < y.size(); ++i) hm(i, i) += 2.0 * grad(i) / std::pow(0.5 - y(i), 3);
      return hm;
    };
  }
  if (f.diagonal_floor && *f.diagonal_floor > -1.0) g.diagonal_floor = t_forward(*f.diagonal_floor);
  return g;
}

CurvatureFunction flow_conjugate(const CurvatureFunction& w, double t) {
  if (w.side != Side::hypersurface) {
    throw PreconditionError("flow_conjugate: needs a hypersurface-side function");
  }
  const double th = std::tanh(t);
  auto shift = [th](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double d = 1.0 - x(i) * th;
      if (d == 0.0) throw PreconditionError("flow_conjugate: pole 1 - x_i tanh t = 0");
      y(i) = (x(i) - th) / d;
    }
    return y;
  };

  CurvatureFunction g;
  g.side = Side::hypersurface;
  g.name = w.name + "^t";
  g.eval = [w, shift](const Eigen::VectorXd& x) { return w.eval(shift(x)); };
  g.cone = [w, shift, th](const Eigen::VectorXd& x) {
    if (((1.0 - x.array() * th) <= 0.0).any()) return false;
    return w.contains(shift(x));
  };
  if (w.gradient) {
    g.gradient = [w, shift, th](const Eigen::VectorXd& x) {
      const Eigen::ArrayXd factor = (1.0 - th * th) / (1.0 - x.array() * th).square();
      return Eigen::VectorXd(w.gradient(shift(x)).array() * factor);
    };
  }
  if (w.diagonal_floor) {
    const double k0 = *w.diagonal_floor;
    g.diagonal_floor = (k0 + th) / (1.0 + k0 * th);
  }
  return g;
}

Eigen::VectorXd fd_gradient(const CurvatureFunction& f, const Eigen::VectorXd& x, double h) {
  if (!(h > 0.0)) throw PreconditionError("fd_gradient: step must be positive");
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd p = x, m = x;
    p(i) += h;
    m(i) -= h;
    g(i) = (f(p) - f(m)) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const CurvatureFunction& f, const Eigen::VectorXd& x, double h) {
  if (!(h > 0.0)) throw PreconditionError("fd_hessian: step must be positive");
  const auto n = x.size();
  const double f0 = f(x);
  Eigen::MatrixXd hm(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd p = x, m = x;
    p(i) += h;
    m(i) -= h;
    hm(i, i) = (f(p) - 2.0 * f0 + f(m)) / (h * h);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::VectorXd pp = x, pm = x, mp = x, mm = x;
      pp(i) += h, pp(j) += h;
      pm(i) += h, pm(j) -= h;
      mp(i) -= h, mp(j) += h;
      mm(i) -= h, mm(j) -= h;
      const double v = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
      hm(i, j) = v;
      hm(j, i) = v;
    }
  }
  return hm;
}

EllipticityReport ellipticity_check(const CurvatureFunction& f,
                                    const std::vector<Eigen::VectorXd>& points, double h) {
  if (!(h > 0.0)) throw PreconditionError("ellipticity_check: step must be positive");
  EllipticityReport report;
  const double kink_tol = std::sqrt(h);
  for (const auto& x : points) {
    EllipticityPoint pt;
    pt.x = x;
    pt.partials.resize(x.size());
    const double f0 = f(x);
    if (!std::isfinite(f0)) throw PreconditionError("ellipticity_check: non-finite value");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      Eigen::VectorXd p = x, m = x;
      p(i) += h;
      m(i) -= h;
      const double fp = f(p), fm = f(m);
      if (!std::isfinite(fp) || !std::isfinite(fm)) {
        throw PreconditionError("ellipticity_check: non-finite value on the stencil");
      }
      const double forward = (fp - f0) / h;
      const double backward = (f0 - fm) / h;
      pt.partials(i) = 0.5 * (forward + backward);
      if (std::abs(forward - backward) > kink_tol * std::max(1.0, std::abs(pt.partials(i)))) {
        pt.smooth = false;
      }
    }
    pt.elliptic = pt.smooth && (pt.partials.array() > 0.0).all();
    report.all_elliptic = report.all_elliptic && pt.elliptic;
    report.all_smooth = report.all_smooth && pt.smooth;
    report.points.push_back(std::move(pt));
  }
  return report;
}

Eigen::MatrixXd hessian_transform(const CurvatureFunction& f, const Eigen::VectorXd& kappa,
                                  double h) {
  if (f.side != Side::metric) throw PreconditionError("hessian_transform: needs a metric-side f");
  const Eigen::VectorXd lam = t_map(kappa, TDirection::k_to_c);
  const Eigen::VectorXd grad = gradient_or_fd(f, lam, h);
  const Eigen::MatrixXd hess = hessian_or_fd(f, lam, h);
  const auto n = kappa.size();
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = hess(i, j) / (std::pow(1.0 + kappa(i), 2) * std::pow(1.0 + kappa(j), 2));
    }
    out(i, i) -= 2.0 * grad(i) / std::pow(1.0 + kappa(i), 3);
  }
  return 0.5 * (out + out.transpose());
}

HrResult hr_inequality(const Eigen::VectorXd& a) {
  if (!in_cone_k(a)) throw PreconditionError("hr_inequality: needs a_i > -1");
  HrResult r;
  r.lhs = ((a.array() - 1.0) / (a.array() + 1.0)).sum();
  r.rhs = 2.0 * a.sum() - static_cast<double>(a.size());
  r.holds = r.lhs <= r.rhs + 1e-12;
  return r;
}

double admissible_constant(const CurvatureFunction& f, int n, double c, double lo, double hi,
                           double tol) {
  if (n < 1) throw PreconditionError("admissible_constant: n must be >= 1");
  if (!(lo < hi)) throw PreconditionError("admissible_constant: bracket must satisfy lo < hi");
  auto g = [&](double s) { return f(Eigen::VectorXd::Constant(n, s)) - c; };
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) hi = lo;
  else if (ghi == 0.0) lo = hi;
  else if ((glo > 0.0) == (ghi > 0.0)) {
    throw NumericalError("admissible_constant: no sign change in the bracket");
  }
  for (int it = 0; it < 400 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  const Eigen::VectorXd grad = fd_gradient(f, Eigen::VectorXd::Constant(n, root), 1e-6);
  if (!(grad.array() > 0.0).all()) {
    throw NumericalError("admissible_constant: derivative is not positive at the root");
  }
  if (f.diagonal_floor && !(root > *f.diagonal_floor)) {
    throw NumericalError("admissible_constant: root does not lie above the cone floor");
  }
  return root;
}

}  // namespace horo
