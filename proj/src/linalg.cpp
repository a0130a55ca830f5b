#include "horo/linalg.hpp"

#include <algorithm>

#include "horo/error.hpp"

namespace horo {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (a + a.transpose()),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  Eigen::VectorXd values = solver.eigenvalues();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

Eigen::VectorXd generalized_eigenvalues(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (b + b.transpose()));
  if (llt.info() != Eigen::Success) {
    throw NumericalError("generalized eigenproblem: metric is not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  const auto lower = l.triangularView<Eigen::Lower>();
  // W = L^{-1} A L^{-T}
  Eigen::MatrixXd w = lower.solve(a);
  w = lower.solve(w.transpose().eval()).transpose();
  return symmetric_eigenvalues(w);
}

double asymmetry(const Eigen::MatrixXd& a) {
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace horo
