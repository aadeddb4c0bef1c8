#pragma once

#include <string>
#include <vector>

#include "relbal/types.hpp"

namespace relbal {

/// Full-dimensional convex lattice polytope, given by its vertices.
/// Supports dimensions 1 and 2 (segments and polygons), which covers the
/// stock models and the desk-scale custom configurations.
class LatticePolytope {
 public:
  LatticePolytope(int dimension, std::vector<VectorXi> vertices);

  int dimension() const { return dim_; }
  const std::vector<VectorXi>& vertices() const { return vertices_; }

  /// Lattice points of the dilation m*P, in lexicographic order.
  std::vector<VectorXi> lattice_points(int dilation) const;

  /// Euclidean volume of P (length for dim 1, area for dim 2), exact.
  double euclidean_volume() const;

  /// Mean of the lattice points of m*P. Used as the weight-centering
  /// constant of the natural torus linearization.
  VectorXd lattice_mean(int dilation) const;

  bool contains_dilated(const VectorXi& point, int dilation) const;

 private:
  int dim_;
  std::vector<VectorXi> vertices_;
  // Facet inequalities a.x <= b for P, integer and primitive.
  std::vector<VectorXi> facet_normals_;
  std::vector<long long> facet_offsets_;

  void build_facets();
};

/// Polarized toric model (M, L): polytope plus its intersection number.
struct PolarizedModel {
  std::string name;
  LatticePolytope polytope;
  std::string chart;  // description of the dense torus chart

  int complex_dimension() const { return polytope.dimension(); }
};

/// c1(L)^n[M] = n! * vol(P).
double degree_volume(const PolarizedModel& model);

/// Monomial basis of H^0(M, O(L^m)): lattice points of m*P, lex order.
struct SectionSet {
  int level = 0;
  std::vector<VectorXi> exponents;

  int count() const { return static_cast<int>(exponents.size()); }
};

SectionSet enumerate_sections(const PolarizedModel& model, int level);

/// Monomial values z^u at a chart point, in section order. z may be zero.
VectorXcd evaluate_sections(const SectionSet& sections, const VectorXcd& chart_point);

// Stock models.
PolarizedModel stock_p1();
PolarizedModel stock_p1xp1();
PolarizedModel stock_p2();
PolarizedModel stock_model(const std::string& name);

}  // namespace relbal
