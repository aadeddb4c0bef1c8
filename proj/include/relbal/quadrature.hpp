#pragma once

#include <cstdint>
#include <string>

#include "relbal/types.hpp"

namespace relbal {

struct QuadratureDescriptor {
  std::string type = "gl-tan";  // "gl-tan" or "mc"
  int resolution = 64;
  std::uint64_t seed = 0;
  double declared_tolerance = 1e-10;
};

/// Nodes and weights for integrals over the dense torus chart in log
/// coordinates (xi, theta):
///   integral f dxi dtheta  ~=  sum_p weights[p] * f(xi.row(p), theta.row(p)).
/// The metric-dependent volume density (n!/pi^n det H) is applied by the
/// caller. "gl-tan" is a tensor Gauss-Legendre grid, with the radial
/// coordinate compactified through r = tan(s), xi = log r. "mc" is a seeded
/// Monte Carlo fallback used for stress tests.
struct QuadratureScheme {
  int chart_dim = 1;
  QuadratureDescriptor descriptor;

  MatrixXd xi;       // num_nodes x n
  MatrixXd theta;    // num_nodes x n
  VectorXd weights;  // num_nodes

  // Tensor factors (empty for "mc").
  VectorXd radial_xi, radial_weight;
  VectorXd angular_theta, angular_weight;

  std::size_t size() const { return static_cast<std::size_t>(weights.size()); }
  bool has_tensor_structure() const { return radial_xi.size() > 0; }

  /// Radial-only companion grid for integrands independent of theta; the
  /// exact angular factor (2*pi)^n is folded into the weights.
  QuadratureScheme radial_reduction() const;
};

QuadratureScheme build_quadrature(int chart_dim, int resolution, std::uint64_t seed,
                                  const std::string& type = "gl-tan");

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, VectorXd& nodes, VectorXd& weights);

}  // namespace relbal
