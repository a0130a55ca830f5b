#include "horo/minkowski.hpp"

#include <cmath>
#include <string>

#include "horo/error.hpp"

namespace horo {

MinkVector::MinkVector(std::initializer_list<double> values) : coords_(values.size()) {
  Eigen::Index i = 0;
  for (double v : values) coords_(i++) = v;
}

MinkVector MinkVector::from_parts(double time, const Eigen::VectorXd& spatial) {
  Eigen::VectorXd c(spatial.size() + 1);
  c(0) = time;
  c.tail(spatial.size()) = spatial;
  return MinkVector(std::move(c));
}

MinkVector& MinkVector::operator+=(const MinkVector& o) {
  if (o.size() != size()) throw PreconditionError("MinkVector: dimension mismatch");
  coords_ += o.coords_;
  return *this;
}

MinkVector& MinkVector::operator-=(const MinkVector& o) {
  if (o.size() != size()) throw PreconditionError("MinkVector: dimension mismatch");
  coords_ -= o.coords_;
  return *this;
}

MinkVector& MinkVector::operator*=(double s) {
  coords_ *= s;
  return *this;
}

double mink_inner(const MinkVector& u, const MinkVector& v) {
  if (u.size() != v.size() || u.size() < 2) {
    throw PreconditionError("mink_inner: dimension mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
  }
  const auto n = u.size();
  return -u[0] * v[0] + u.coords().tail(n - 1).dot(v.coords().tail(n - 1));
}

double hyperquadric_residual(const MinkVector& v, double target) {
  const double scale = std::max(1.0, v.coords().squaredNorm());
  return std::abs(mink_inner(v, v) - target) / scale;
}

bool on_hyperboloid(const MinkVector& v, double tol) {
  return v.size() >= 2 && v.time() > 0.0 && hyperquadric_residual(v, -1.0) <= tol;
}

bool on_null_cone(const MinkVector& v, double tol) {
  return v.size() >= 2 && v.time() > 0.0 && hyperquadric_residual(v, 0.0) <= tol;
}

bool on_de_sitter(const MinkVector& v, double tol) {
  return v.size() >= 2 && hyperquadric_residual(v, 1.0) <= tol;
}

BallPoint to_poincare_ball(const MinkVector& v, double tol) {
  if (!on_hyperboloid(v, tol)) {
    throw PreconditionError("to_poincare_ball: point is not on the hyperboloid");
  }
  return BallPoint(v.spatial() / (1.0 + v.time()));
}

MinkVector from_poincare_ball(const BallPoint& p) {
  const double r2 = p.coords().squaredNorm();
  if (!(r2 < 1.0)) throw PreconditionError("from_poincare_ball: ideal point (|p| >= 1)");
  const double d = 1.0 - r2;
  return MinkVector::from_parts((1.0 + r2) / d, 2.0 * p.coords() / d);
}

MinkVector geodesic_point(const MinkVector& phi, const MinkVector& eta, double t, double tol) {
  if (!on_hyperboloid(phi, tol)) throw PreconditionError("geodesic_point: phi is not on H");
  if (!on_de_sitter(eta, tol)) throw PreconditionError("geodesic_point: eta is not unit spacelike");
  const double scale = std::max(1.0, phi.coords().norm() * eta.coords().norm());
  if (std::abs(mink_inner(phi, eta)) > tol * scale) {
    throw PreconditionError("geodesic_point: eta is not orthogonal to phi");
  }
  return std::cosh(t) * phi + std::sinh(t) * eta;
}

MinkVector geodesic_direction(const MinkVector& phi, const MinkVector& eta, double t) {
  return std::sinh(t) * phi + std::cosh(t) * eta;
}

}  // namespace horo
