#pragma once

#include "relbal/types.hpp"

namespace relbal {

/// Eigenvalues of a Hermitian matrix, ascending.
VectorXd hermitian_eigenvalues(const MatrixXcd& M);

/// M^{-1/2} through a Hermitian eigendecomposition. Throws
/// singular_metric_error when an eigenvalue falls below `floor`.
MatrixXcd hermitian_inverse_sqrt(const MatrixXcd& M, double floor = kEigenvalueFloor);

/// M^{1/2}, same eigendecomposition route.
MatrixXcd hermitian_sqrt(const MatrixXcd& M, double floor = kEigenvalueFloor);

MatrixXcd hermitian_inverse(const MatrixXcd& M, double floor = kEigenvalueFloor);

/// (M + M^H) / 2, removing accumulated asymmetry.
MatrixXcd symmetrize(const MatrixXcd& M);

void check_positive_definite(const MatrixXcd& M, double floor, const char* context);

}  // namespace relbal
