#pragma once

#include <Eigen/Dense>

namespace horo {

/// Eigenvalues of B^{-1} A for symmetric A and symmetric positive definite B,
/// ascending. Uses the whitening L^{-1} A L^{-T} with B = L L^T. Throws
/// NumericalError if B is not positive definite.
Eigen::VectorXd generalized_eigenvalues(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Ascending eigenvalues of a symmetric matrix.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a);

/// max |a_ij - a_ji|.
double asymmetry(const Eigen::MatrixXd& a);

}  // namespace horo
