#pragma once

// Pointed rational cones: construction over slice polytopes, duals,
// multiplicities, the Gorenstein functional, Hilbert bases, embedding
// dimension.

#include <optional>

#include "crepant/polytope.hpp"

namespace crepant {

class RationalCone {
 public:
  /// Minimal primitive generating rays of pos(generators); throws if the
  /// cone is not pointed (checked by exact LP: no nontrivial nonnegative
  /// combination of the rays vanishes).
  static RationalCone from_generators(std::vector<IntVec> generators);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  std::size_t rank() const;
  bool full_dimensional() const { return rank() == ambient_; }

  bool operator==(const RationalCone& o) const { return gens_ == o.gens_; }

 private:
  RationalCone(std::vector<IntVec> gens, std::size_t ambient)
      : ambient_(ambient), gens_(std::move(gens)) {}
  std::size_t ambient_ = 0;
  std::vector<IntVec> gens_;  // sorted, primitive, irredundant
};

/// pos(P) for a slice polytope P: the generators are exactly the vertices
/// (they sit at lattice height one, so they are already primitive).
RationalCone cone_over(const LatticePolytope& p);

/// Dual of a full-dimensional pointed cone, computed by brute-force facet
/// enumeration; involutive on that class.
RationalCone dual_cone(const RationalCone& c);

/// General dual description: rays plus a basis of the lineality space (the
/// dual of a non-full-dimensional cone is not pointed).
struct DualDescription {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};
DualDescription dual_description(const RationalCone& c);

/// Index of Z<generators> inside the lattice of the cone's span; 1 iff the
/// cone is basic (equivalently the affine chart is smooth).
Int multiplicity(const RationalCone& c);

/// The unique primitive functional taking value 1 on every generator, when
/// it exists integrally; otherwise nullopt (the cone is not Gorenstein).
std::optional<IntVec> gorenstein_functional(const RationalCone& c);

/// Unique minimal generating set of the monoid of lattice points of a
/// pointed cone, sorted lexicographically.
std::vector<IntVec> hilbert_basis(const RationalCone& c);

/// Cardinality of the Hilbert basis of the dual cone.
std::size_t embedding_dimension(const RationalCone& c);

}  // namespace crepant
