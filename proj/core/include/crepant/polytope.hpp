#pragma once

// V- and H-representations of lattice polytopes at desk scale: hulls,
// facets, lattice points, dilation, normalized volume. All tests are exact;
// facet enumeration is brute force over vertex subsets, which is fine for
// the polytope sizes this library targets (dimension <= ~6, few dozen
// vertices).

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "crepant/linalg.hpp"

namespace crepant {

/// <normal, x> <= rhs, or = rhs when `equality` is set. Facet normals are
/// primitive relative to the dual of the affine lattice of the polytope.
struct Halfspace {
  IntVec normal;
  Int rhs;
  bool equality = false;

  bool contains(const IntVec& x) const {
    Int v = dot(normal, x);
    return equality ? v == rhs : v <= rhs;
  }
  bool tight(const IntVec& x) const { return dot(normal, x) == rhs; }
  bool operator==(const Halfspace& o) const {
    return normal == o.normal && rhs == o.rhs && equality == o.equality;
  }
};

/// Facet of a polytope: the ambient halfspace together with its description
/// in the affine-lattice chart and the vertices it is tight on.
struct Facet {
  Halfspace ambient;
  IntVec chart_normal;
  Int chart_rhs;
  std::vector<std::size_t> tight;  // vertex indices
};

class LatticePolytope {
 public:
  /// Convex hull: keeps exactly the extreme points (decided by exact
  /// rational feasibility).
  static LatticePolytope from_points(std::vector<IntVec> points);

  /// Trusted constructor: `vertices` must already be distinct extreme points.
  static LatticePolytope from_vertices(std::vector<IntVec> vertices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const;
  const std::vector<IntVec>& vertices() const { return verts_; }

  /// All vertices lie on x_1 = 1.
  bool is_slice() const;

  const AffineLatticeBasis& chart() const;
  /// Integer coordinates of a lattice point of aff(P) in the chart.
  IntVec chart_coords(const IntVec& p) const;
  IntVec from_chart(const IntVec& c) const;

  const std::vector<Facet>& facets() const;
  std::vector<Halfspace> facet_halfspaces() const;

  bool contains(const IntVec& p) const;
  bool strictly_contains(const IntVec& p) const;  // relative interior

  /// All lattice points of P, sorted lexicographically.
  std::vector<IntVec> lattice_points() const;
  std::vector<IntVec> interior_lattice_points() const;

  /// Lattice points that are not vertices; they index the exceptional prime
  /// divisors of any crepant resolution over P. Slice polytopes only.
  std::vector<IntVec> exceptional_points() const;

  LatticePolytope dilate(const Int& nu) const;

  /// dim(P)! times the Euclidean volume measured in the affine lattice of
  /// aff(P); 1 for a point by convention.
  Int normalized_volume() const;

  /// A triangulation of P using only its vertices (pyramids over facets,
  /// recursively); each simplex is a list of vertices.
  std::vector<std::vector<IntVec>> fan_triangulation() const;

  bool operator==(const LatticePolytope& o) const {
    return ambient_ == o.ambient_ && verts_ == o.verts_;
  }

 private:
  LatticePolytope(std::vector<IntVec> verts, std::size_t ambient);

  std::size_t ambient_ = 0;
  std::vector<IntVec> verts_;  // sorted lexicographically

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Extreme points of a point set, exact; order-insensitive.
std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points);

/// Facet inequalities (chart form) of the hull of a full-dimensional point
/// set in Z^k given by its extreme points.
std::vector<std::pair<IntVec, Int>> facet_inequalities_fulldim(
    const std::vector<IntVec>& pts);

bool is_elementary_simplex(const LatticePolytope& s);
bool is_basic_simplex(const LatticePolytope& s);

/// x -> u x + t on column vectors; for tests of lattice-equivalence
/// invariance.
LatticePolytope apply_affine_map(const LatticePolytope& p, const IntMat& u,
                                 const IntVec& t);

}  // namespace crepant
