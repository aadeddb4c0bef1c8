#include "relbal/linalg.hpp"

#include <string>

namespace relbal {

namespace {

Eigen::SelfAdjointEigenSolver<MatrixXcd> solve_checked(const MatrixXcd& M, double floor,
                                                       const char* context) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(symmetrize(M));
  if (es.info() != Eigen::Success) {
    throw singular_metric_error(std::string(context) + ": eigendecomposition failed");
  }
  if (es.eigenvalues()[0] <= floor) {
    throw singular_metric_error(std::string(context) + ": eigenvalue " +
                                std::to_string(es.eigenvalues()[0]) +
                                " at or below the positivity floor");
  }
  return es;
}

}  // namespace

MatrixXcd symmetrize(const MatrixXcd& M) { return 0.5 * (M + M.adjoint()); }

VectorXd hermitian_eigenvalues(const MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(symmetrize(M), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

MatrixXcd hermitian_inverse_sqrt(const MatrixXcd& M, double floor) {
  auto es = solve_checked(M, floor, "hermitian_inverse_sqrt");
  VectorXd inv_sqrt = es.eigenvalues().array().rsqrt();
  return es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
}

MatrixXcd hermitian_sqrt(const MatrixXcd& M, double floor) {
  auto es = solve_checked(M, floor, "hermitian_sqrt");
  VectorXd sqrt_vals = es.eigenvalues().array().sqrt();
  return es.eigenvectors() * sqrt_vals.asDiagonal() * es.eigenvectors().adjoint();
}

MatrixXcd hermitian_inverse(const MatrixXcd& M, double floor) {
  auto es = solve_checked(M, floor, "hermitian_inverse");
  VectorXd inv_vals = es.eigenvalues().array().inverse();
  return es.eigenvectors() * inv_vals.asDiagonal() * es.eigenvectors().adjoint();
}

void check_positive_definite(const MatrixXcd& M, double floor, const char* context) {
  solve_checked(M, floor, context);
}

}  // namespace relbal
