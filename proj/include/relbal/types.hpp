#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace relbal {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// Thrown when a Hermitian state or Gram matrix fails the positivity floor,
/// or the induced form degenerates at a quadrature node.
class singular_metric_error : public std::runtime_error {
 public:
  explicit singular_metric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an index vector violates the weighted sum constraint.
class invalid_index_error : public std::invalid_argument {
 public:
  explicit invalid_index_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a state passed to index extraction is not close enough to
/// blockwise-scalar Gram form.
class not_critical_error : public std::runtime_error {
 public:
  explicit not_critical_error(const std::string& what) : std::runtime_error(what) {}
};

// Eigenvalue floor below which Hermitian forms are rejected as singular.
inline constexpr double kEigenvalueFloor = 1e-12;

}  // namespace relbal
