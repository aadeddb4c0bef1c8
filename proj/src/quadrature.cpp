#include "relbal/quadrature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace relbal {

void gauss_legendre(int n, VectorXd& nodes, VectorXd& weights) {
  nodes.resize(n);
  weights.resize(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

namespace {

QuadratureScheme build_gl_tan(int chart_dim, int resolution, std::uint64_t seed) {
  const double pi = std::acos(-1.0);
  VectorXd gx, gw;
  gauss_legendre(resolution, gx, gw);

  QuadratureScheme q;
  q.chart_dim = chart_dim;
  q.descriptor = {"gl-tan", resolution, seed,
                  chart_dim == 1 ? (resolution >= 32 ? 1e-10 : 1e-6)
                                 : (resolution >= 16 ? 1e-8 : 1e-6)};

  q.radial_xi.resize(resolution);
  q.radial_weight.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double s = 0.25 * pi * (gx[i] + 1.0);  // s in (0, pi/2)
    q.radial_xi[i] = std::log(std::tan(s));
    // dxi/ds = 2 / sin(2s)
    q.radial_weight[i] = gw[i] * 0.25 * pi * 2.0 / std::sin(2.0 * s);
  }
  q.angular_theta.resize(resolution);
  q.angular_weight.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    q.angular_theta[i] = pi * (gx[i] + 1.0);  // theta in (0, 2 pi)
    q.angular_weight[i] = gw[i] * pi;
  }

  const int per_dim = resolution * resolution;
  std::size_t total = 1;
  for (int d = 0; d < chart_dim; ++d) total *= per_dim;
  q.xi.resize(total, chart_dim);
  q.theta.resize(total, chart_dim);
  q.weights.resize(total);

  std::vector<int> idx(2 * chart_dim, 0);  // (r_1, a_1, r_2, a_2, ...)
  for (std::size_t p = 0; p < total; ++p) {
    double w = 1.0;
    for (int d = 0; d < chart_dim; ++d) {
      const int ir = idx[2 * d], ia = idx[2 * d + 1];
      q.xi(p, d) = q.radial_xi[ir];
      q.theta(p, d) = q.angular_theta[ia];
      w *= q.radial_weight[ir] * q.angular_weight[ia];
    }
    q.weights[p] = w;
    for (int k = 2 * chart_dim - 1; k >= 0; --k) {
      if (++idx[k] < resolution) break;
      idx[k] = 0;
    }
  }
  return q;
}

QuadratureScheme build_mc(int chart_dim, int resolution, std::uint64_t seed) {
  const double pi = std::acos(-1.0);
  QuadratureScheme q;
  q.chart_dim = chart_dim;
  q.descriptor = {"mc", resolution, seed, 20.0 / std::sqrt(double(resolution))};
  const std::size_t total = static_cast<std::size_t>(resolution);
  q.xi.resize(total, chart_dim);
  q.theta.resize(total, chart_dim);
  q.weights.resize(total);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t p = 0; p < total; ++p) {
    double w = 1.0;
    for (int d = 0; d < chart_dim; ++d) {
      const double s = 0.5 * pi * unif(rng);
      q.xi(p, d) = std::log(std::tan(s));
      q.theta(p, d) = 2.0 * pi * unif(rng);
      w *= (0.5 * pi) * (2.0 / std::sin(2.0 * s)) * (2.0 * pi);
    }
    q.weights[p] = w / static_cast<double>(total);
  }
  return q;
}

}  // namespace

QuadratureScheme build_quadrature(int chart_dim, int resolution, std::uint64_t seed,
                                  const std::string& type) {
  if (chart_dim < 1 || chart_dim > 2) {
    throw std::invalid_argument("build_quadrature: chart dimension must be 1 or 2");
  }
  if (resolution < 4) {
    throw std::invalid_argument(
        "build_quadrature: resolution " + std::to_string(resolution) +
        " is below the minimum of 4; the compactified radial rule degenerates");
  }
  if (type == "gl-tan") return build_gl_tan(chart_dim, resolution, seed);
  if (type == "mc") return build_mc(chart_dim, resolution, seed);
  throw std::invalid_argument("build_quadrature: unknown scheme type " + type);
}

QuadratureScheme QuadratureScheme::radial_reduction() const {
  if (!has_tensor_structure()) {
    throw std::logic_error("radial_reduction: scheme has no tensor structure");
  }
  const double two_pi = 2.0 * std::acos(-1.0);
  QuadratureScheme q;
  q.chart_dim = chart_dim;
  q.descriptor = descriptor;
  q.radial_xi = radial_xi;
  q.radial_weight = radial_weight;
  const int R = static_cast<int>(radial_xi.size());
  std::size_t total = 1;
  for (int d = 0; d < chart_dim; ++d) total *= R;
  q.xi.resize(total, chart_dim);
  q.theta = MatrixXd::Zero(total, chart_dim);
  q.weights.resize(total);
  std::vector<int> idx(chart_dim, 0);
  for (std::size_t p = 0; p < total; ++p) {
    double w = 1.0;
    for (int d = 0; d < chart_dim; ++d) {
      q.xi(p, d) = radial_xi[idx[d]];
      w *= radial_weight[idx[d]] * two_pi;
    }
    q.weights[p] = w;
    for (int k = chart_dim - 1; k >= 0; --k) {
      if (++idx[k] < R) break;
      idx[k] = 0;
    }
  }
  return q;
}

}  // namespace relbal
