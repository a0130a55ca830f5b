#pragma once

#include <Eigen/Dense>

namespace horo {

/// Default relative tolerance for hyperquadric membership tests.
inline constexpr double kHyperquadricTol = 1e-9;

/// Point or vector of Minkowski space R^{1,n+1}; index 0 is the timelike
/// coordinate.
class MinkVector {
 public:
  MinkVector() = default;
  explicit MinkVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {}
  MinkVector(std::initializer_list<double> values);

  static MinkVector zero(Eigen::Index ambient_dim) {
    return MinkVector(Eigen::VectorXd::Zero(ambient_dim));
  }
  /// (a, x) with x spatial.
  static MinkVector from_parts(double time, const Eigen::VectorXd& spatial);

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }
  double operator[](Eigen::Index i) const { return coords_(i); }
  double time() const { return coords_(0); }
  Eigen::VectorXd spatial() const { return coords_.tail(coords_.size() - 1); }

  MinkVector& operator+=(const MinkVector& o);
  MinkVector& operator-=(const MinkVector& o);
  MinkVector& operator*=(double s);

  friend MinkVector operator+(MinkVector a, const MinkVector& b) { return a += b; }
  friend MinkVector operator-(MinkVector a, const MinkVector& b) { return a -= b; }
  friend MinkVector operator*(double s, MinkVector a) { return a *= s; }
  friend MinkVector operator*(MinkVector a, double s) { return a *= s; }

 private:
  Eigen::VectorXd coords_;
};

/// Point of the Poincare ball model B^{n+1}.
class BallPoint {
 public:
  BallPoint() = default;
  explicit BallPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {}

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }
  double operator[](Eigen::Index i) const { return coords_(i); }
  double norm() const { return coords_.norm(); }

 private:
  Eigen::VectorXd coords_;
};

/// -u0 v0 + sum_i ui vi. Throws PreconditionError on dimension mismatch.
double mink_inner(const MinkVector& u, const MinkVector& v);

// Membership tests. The tolerance is relative to the Euclidean size of v, so
// points far out along a flow are judged by the same standard as points near
// the base point.
bool on_hyperboloid(const MinkVector& v, double tol = kHyperquadricTol);
bool on_null_cone(const MinkVector& v, double tol = kHyperquadricTol);
bool on_de_sitter(const MinkVector& v, double tol = kHyperquadricTol);

/// Residual |<v,v> - target| divided by max(1, |v|_E^2).
double hyperquadric_residual(const MinkVector& v, double target);

/// (x1..x_{n+1}) / (1 + x0). Requires v on H^{n+1}.
BallPoint to_poincare_ball(const MinkVector& v, double tol = kHyperquadricTol);

/// Inverse of to_poincare_ball. Requires |p| < 1.
MinkVector from_poincare_ball(const BallPoint& p);

/// phi cosh t + eta sinh t: the point at distance t along the geodesic leaving
/// phi in direction eta. Requires phi on H, eta unit spacelike, <phi,eta> = 0.
MinkVector geodesic_point(const MinkVector& phi, const MinkVector& eta, double t,
                          double tol = kHyperquadricTol);

/// Parallel-transported direction phi sinh t + eta cosh t at geodesic_point.
MinkVector geodesic_direction(const MinkVector& phi, const MinkVector& eta, double t);

}  // namespace horo
