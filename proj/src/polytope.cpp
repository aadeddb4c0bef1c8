#include "relbal/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace relbal {

namespace {

long long igcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool lex_less(const VectorXi& a, const VectorXi& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

LatticePolytope::LatticePolytope(int dimension, std::vector<VectorXi> vertices)
    : dim_(dimension), vertices_(std::move(vertices)) {
  if (dim_ < 1 || dim_ > 2) {
    throw std::invalid_argument("LatticePolytope: only dimensions 1 and 2 are supported");
  }
  if (vertices_.empty()) {
    throw std::invalid_argument("LatticePolytope: empty vertex list");
  }
  for (const auto& v : vertices_) {
    if (v.size() != dim_) {
      throw std::invalid_argument("LatticePolytope: vertex dimension mismatch");
    }
  }
  build_facets();
}

void LatticePolytope::build_facets() {
  facet_normals_.clear();
  facet_offsets_.clear();
  if (dim_ == 1) {
    long long lo = vertices_[0][0], hi = vertices_[0][0];
    for (const auto& v : vertices_) {
      lo = std::min<long long>(lo, v[0]);
      hi = std::max<long long>(hi, v[0]);
    }
    if (lo == hi) throw std::invalid_argument("LatticePolytope: degenerate segment");
    VectorXi up(1), down(1);
    up[0] = 1;
    down[0] = -1;
    facet_normals_.push_back(up);
    facet_offsets_.push_back(hi);
    facet_normals_.push_back(down);
    facet_offsets_.push_back(-lo);
    return;
  }
  // dim 2: every pair of vertices is a candidate edge; keep it when all
  // other vertices lie weakly on one side. Exact integer arithmetic.
  const int nv = static_cast<int>(vertices_.size());
  bool full_dimensional = false;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      long long ex = vertices_[j][0] - vertices_[i][0];
      long long ey = vertices_[j][1] - vertices_[i][1];
      if (ex == 0 && ey == 0) continue;
      // Normal (ey, -ex) and its negative.
      for (int sign : {1, -1}) {
        long long nx = sign * ey, ny = -sign * ex;
        long long b = nx * vertices_[i][0] + ny * vertices_[i][1];
        bool all_below = true, some_strict = false;
        for (int k = 0; k < nv; ++k) {
          long long s = nx * vertices_[k][0] + ny * vertices_[k][1];
          if (s > b) {
            all_below = false;
            break;
          }
          if (s < b) some_strict = true;
        }
        if (!all_below) continue;
        if (some_strict) full_dimensional = true;
        long long g = igcd(igcd(nx, ny), b);
        if (g > 1) {
          nx /= g;
          ny /= g;
          b /= g;
        }
        VectorXi n(2);
        n[0] = static_cast<int>(nx);
        n[1] = static_cast<int>(ny);
        bool dup = false;
        for (size_t f = 0; f < facet_normals_.size(); ++f) {
          if (facet_normals_[f] == n && facet_offsets_[f] == b) dup = true;
        }
        if (!dup) {
          facet_normals_.push_back(n);
          facet_offsets_.push_back(b);
        }
      }
    }
  }
  if (!full_dimensional || euclidean_volume() <= 0.0) {
    throw std::invalid_argument("LatticePolytope: polygon is not full-dimensional");
  }
}

bool LatticePolytope::contains_dilated(const VectorXi& point, int dilation) const {
  for (size_t f = 0; f < facet_normals_.size(); ++f) {
    long long s = 0;
    for (int i = 0; i < dim_; ++i) s += static_cast<long long>(facet_normals_[f][i]) * point[i];
    if (s > facet_offsets_[f] * static_cast<long long>(dilation)) return false;
  }
  return true;
}

std::vector<VectorXi> LatticePolytope::lattice_points(int dilation) const {
  if (dilation < 1) throw std::invalid_argument("lattice_points: dilation must be >= 1");
  VectorXi lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_) {
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<VectorXi> points;
  if (dim_ == 1) {
    for (int x = lo[0] * dilation; x <= hi[0] * dilation; ++x) {
      VectorXi p(1);
      p[0] = x;
      if (contains_dilated(p, dilation)) points.push_back(p);
    }
  } else {
    for (int x = lo[0] * dilation; x <= hi[0] * dilation; ++x) {
      for (int y = lo[1] * dilation; y <= hi[1] * dilation; ++y) {
        VectorXi p(2);
        p[0] = x;
        p[1] = y;
        if (contains_dilated(p, dilation)) points.push_back(p);
      }
    }
  }
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

double LatticePolytope::euclidean_volume() const {
  if (dim_ == 1) {
    int lo = vertices_[0][0], hi = vertices_[0][0];
    for (const auto& v : vertices_) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return static_cast<double>(hi - lo);
  }
  // Shoelace over the convex hull in angular order around the centroid.
  std::vector<VectorXi> hull = vertices_;
  double cx = 0, cy = 0;
  for (const auto& v : hull) {
    cx += v[0];
    cy += v[1];
  }
  cx /= hull.size();
  cy /= hull.size();
  std::sort(hull.begin(), hull.end(), [&](const VectorXi& a, const VectorXi& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  long long twice_area = 0;
  const int nv = static_cast<int>(hull.size());
  for (int i = 0; i < nv; ++i) {
    const VectorXi& a = hull[i];
    const VectorXi& b = hull[(i + 1) % nv];
    twice_area += static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
  }
  return std::abs(static_cast<double>(twice_area)) / 2.0;
}

VectorXd LatticePolytope::lattice_mean(int dilation) const {
  const auto pts = lattice_points(dilation);
  VectorXd mean = VectorXd::Zero(dim_);
  for (const auto& p : pts) mean += p.cast<double>();
  mean /= static_cast<double>(pts.size());
  return mean;
}

double degree_volume(const PolarizedModel& model) {
  const int n = model.complex_dimension();
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  const double vol = model.polytope.euclidean_volume();
  if (vol <= 0.0) throw std::invalid_argument("degree_volume: degenerate polytope");
  return fact * vol;
}

SectionSet enumerate_sections(const PolarizedModel& model, int level) {
  if (level < 1) throw std::invalid_argument("enumerate_sections: level must be >= 1");
  SectionSet s;
  s.level = level;
  s.exponents = model.polytope.lattice_points(level);
  return s;
}

VectorXcd evaluate_sections(const SectionSet& sections, const VectorXcd& chart_point) {
  VectorXcd out(sections.count());
  for (int j = 0; j < sections.count(); ++j) {
    Complex value(1.0, 0.0);
    const VectorXi& u = sections.exponents[j];
    for (int a = 0; a < u.size(); ++a) {
      for (int k = 0; k < u[a]; ++k) value *= chart_point[a];
    }
    out[j] = value;
  }
  return out;
}

PolarizedModel stock_p1() {
  VectorXi v0(1), v1(1);
  v0[0] = 0;
  v1[0] = 1;
  return PolarizedModel{"P1", LatticePolytope(1, {v0, v1}), "z in C^*, sections z^u, u in [0, m]"};
}

PolarizedModel stock_p1xp1() {
  std::vector<VectorXi> vs;
  for (int x : {0, 1}) {
    for (int y : {0, 1}) {
      VectorXi v(2);
      v[0] = x;
      v[1] = y;
      vs.push_back(v);
    }
  }
  return PolarizedModel{"P1xP1", LatticePolytope(2, vs), "(z1, z2) in (C^*)^2, square polytope"};
}

PolarizedModel stock_p2() {
  std::vector<VectorXi> vs;
  VectorXi a(2), b(2), c(2);
  a << 0, 0;
  b << 1, 0;
  c << 0, 1;
  vs = {a, b, c};
  return PolarizedModel{"P2", LatticePolytope(2, vs), "(z1, z2) in (C^*)^2, unit triangle"};
}

PolarizedModel stock_model(const std::string& name) {
  if (name == "P1") return stock_p1();
  if (name == "P1xP1") return stock_p1xp1();
  if (name == "P2") return stock_p2();
  throw std::invalid_argument("unknown stock model: " + name);
}

}  // namespace relbal
